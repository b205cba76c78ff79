#include "lq/cli/app.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "lq/cli/input.hpp"
#include "lq/cli/report.hpp"
#include "lq/error.hpp"
#include "lq/linalg/subspace.hpp"
#include "lq/quiver/quiver.hpp"
#include "lq/rep/tree_rep.hpp"
#include "lq/strata/brute_force.hpp"
#include "lq/strata/pluecker.hpp"
#include "lq/strata/strata.hpp"
#include "lq/tropical/cycle_example.hpp"

namespace lq::cli {

namespace {

struct Options {
    std::uint32_t p = 0;
    std::uint64_t seed = 1;
    bool pretty = false;
    bool close = false;
    bool realize = false;
    std::uint32_t oracle = 0;
    std::uint64_t budget = strata::kDefaultBudget;
    int auto_concentrate = 0;
    std::vector<int> ranks;
    std::string input;
    int n12 = 1, n13 = 1, n23 = 1;
    std::vector<int> w0;
    bool analyze = false;
};

// Raised when a computed invariant disagrees with its prediction; the report is still printed.
struct Mismatch {
    Report report;
};

Report provenance(const std::string& command, const std::string& hashed, std::uint64_t seed, std::uint32_t p) {
    Report r;
    r["command"] = command;
    r["input_hash"] = fnv1a_hex(hashed);
    r["seed"] = seed;
    r["p"] = p;
    return r;
}

Report subspace_json(const Subspace& s) {
    Report rows = Report::array();
    for (const auto& v : s.basis_vectors()) rows.push_back(v);
    return rows;
}

Report subrep_json(const rep::SubRep& u) {
    Report r = Report::array();
    for (const auto& s : u.spaces) r.push_back(subspace_json(s));
    return r;
}

Report exponent_rows(const dvr::KMatrix& diag) {
    Report r = Report::array();
    for (std::size_t i = 0; i < diag.rows(); ++i) {
        Report row = Report::array();
        for (std::size_t j = 0; j < diag.cols(); ++j) row.push_back(diag(i, j).to_string());
        r.push_back(row);
    }
    return r;
}

std::vector<int> default_ranks(const Options& o, std::size_t d) {
    if (!o.ranks.empty()) return o.ranks;
    std::vector<int> r;
    for (int k = 1; k <= static_cast<int>(d); ++k) r.push_back(k);
    return r;
}

// Quiver, relations, local independence and (when possible) strata for each rank.
Report analysis(const dvr::LatticeConfiguration& cfg, const std::vector<int>& ranks) {
    Report r;
    r["classes"] = cfg.size();
    r["dim"] = cfg.dim();
    r["input_to_class"] = cfg.input_to_class();
    r["convex"] = dvr::is_convex(cfg);
    r["n"] = cfg.n_matrix();
    quiver::WeightedQuiver q = quiver::WeightedQuiver::from_configuration(cfg);
    Report arrows = Report::array();
    for (const auto& a : q.arrows()) arrows.push_back({{"from", a.from}, {"to", a.to}, {"weight", q.n(a.from, a.to)}});
    auto tree = q.double_tree();
    r["quiver"] = {{"vertices", q.size()}, {"arrows", arrows}, {"double_tree", tree.has_value()}, {"algebra_dim", q.algebra_dim()}};
    rep::QuiverRep m = rep::build_M(cfg);
    auto rel = rep::check_relations(cfg, m, std::min<std::size_t>(cfg.size() + 1, 6));
    r["relations"] = {{"ok", rel.ok}, {"paths_checked", rel.paths_checked}, {"mixed_pairs", rel.mixed_pairs.size()}};
    bool lli = rep::local_linear_independence(cfg);
    r["locally_linearly_independent"] = lli;
    if (!tree || !lli) {
        r["strata"] = nullptr;
        r["strata_note"] = "strata are classified only for locally linearly independent configurations";
        return r;
    }
    rep::TreeRep tr(m);
    const auto& g = tr.geom();
    Report edges = Report::array();
    for (const auto& e : g.edges()) edges.push_back({e.s, e.t});
    r["oriented_edges"] = edges;
    auto d = strata::ambient_multiplicities(tr);
    r["ambient_multiplicities"] = d;
    int total = 0;
    for (int x : d) total += x;
    Report per_rank = Report::array();
    for (int rank : ranks) {
        if (rank < 1 || rank > total) throw InvalidInput("rank must lie between 1 and d");
        Report s;
        s["r"] = rank;
        auto tuples = strata::enumerate_strata(g, d, rank);
        auto maximal = strata::maximal_elements(tuples);
        Report list = Report::array();
        for (const auto& t : tuples) {
            auto dec = strata::decomposition_of(g, rank, t);
            list.push_back({{"tuple", t},
                            {"vertex_multiplicities", dec.vertex},
                            {"edge_multiplicities", dec.edge},
                            {"dim", strata::stratum_dim(g, d, dec)},
                            {"maximal", std::find(maximal.begin(), maximal.end(), t) != maximal.end()}});
        }
        s["strata"] = list;
        Report comps = Report::array();
        std::set<strata::StrataTuple> images;
        for (const auto& rv : strata::components(g, d, rank)) {
            rep::Decomposition dec{rv, std::vector<int>(g.edges().size(), 0)};
            auto img = strata::component_image(g, rv);
            images.insert(img);
            comps.push_back({{"label", rv}, {"image", img}, {"dim", strata::stratum_dim(g, d, dec)}});
        }
        s["components"] = comps;
        s["component_count"] = comps.size();
        s["maximal_equals_components"] = std::set<strata::StrataTuple>(maximal.begin(), maximal.end()) == images;
        per_rank.push_back(s);
    }
    r["strata"] = per_rank;
    return r;
}

dvr::LatticeConfiguration load_config(const ConfigDocument& doc, const Options& o, Report& meta) {
    dvr::LatticeConfiguration cfg = doc.build(o.p);
    if (cfg.dim() != doc.d) throw InvalidInput("lattice dimension does not match \"d\"");
    bool convex = dvr::is_convex(cfg);
    meta["input_convex"] = convex;
    if (!convex) {
        if (!o.close) throw InvalidInput("configuration is not convex; rerun with --close");
        cfg = dvr::convex_closure(cfg);
        meta["closed"] = true;
    }
    return cfg;
}

Report cmd_analyze(const Options& o) {
    ConfigDocument doc = parse_config(read_file(o.input));
    const std::uint32_t p = o.p ? o.p : doc.p;
    Report r;
    r["provenance"] = provenance("analyze", doc.raw, o.seed, p);
    Report meta;
    auto cfg = load_config(doc, o, meta);
    r["input"] = meta;
    r["analysis"] = analysis(cfg, default_ranks(o, cfg.dim()));
    return r;
}

// Brute-force comparison over F_q; the configuration is rebuilt with q as its prime.
Report oracle_report(const ConfigDocument& doc, const Options& o, std::uint32_t q, const std::vector<int>& ranks, bool& agree) {
    Report meta;
    Options oq = o;
    oq.p = q;
    auto cfg = load_config(doc, oq, meta);
    rep::TreeRep tr(rep::build_M(cfg));
    if (!tr.locally_independent()) throw NotLocallyIndependent("configuration over F_q is not locally linearly independent");
    auto d = strata::ambient_multiplicities(tr);
    Report out;
    out["q"] = q;
    out["ambient_multiplicities"] = d;
    Report per = Report::array();
    for (int rank : ranks) {
        auto counts = strata::brute_force_strata(tr, static_cast<std::size_t>(rank), o.budget);
        std::vector<strata::StrataTuple> seen;
        Report count_list = Report::array();
        for (const auto& [t, n] : counts) {
            seen.push_back(t);
            count_list.push_back({{"tuple", t}, {"points", n}});
        }
        auto predicted = strata::enumerate_strata(tr.geom(), d, rank);
        auto max_seen = strata::maximal_elements(seen);
        std::set<strata::StrataTuple> images;
        for (const auto& rv : strata::components(tr.geom(), d, rank)) images.insert(strata::component_image(tr.geom(), rv));
        bool tuples_ok = seen == predicted;
        bool max_ok = std::set<strata::StrataTuple>(max_seen.begin(), max_seen.end()) == images;
        agree = agree && tuples_ok && max_ok;
        per.push_back({{"r", rank}, {"point_counts", count_list}, {"stratum_set_agrees", tuples_ok}, {"maximal_agrees", max_ok}});
    }
    out["ranks"] = per;
    return out;
}

Report cmd_strata(const Options& o) {
    if (o.ranks.empty()) throw InvalidInput("strata needs -r");
    ConfigDocument doc = parse_config(read_file(o.input));
    const std::uint32_t p = o.p ? o.p : doc.p;
    Report r;
    r["provenance"] = provenance("strata", doc.raw, o.seed, p);
    Report meta;
    auto cfg = load_config(doc, o, meta);
    r["input"] = meta;
    Report a = analysis(cfg, o.ranks);
    if (a["strata"].is_null()) throw NotLocallyIndependent("configuration is not locally linearly independent");
    r["analysis"] = a;
    bool ok = true;
    for (const auto& s : a["strata"]) ok = ok && s["maximal_equals_components"].get<bool>();
    if (o.realize) {
        std::mt19937_64 rng(o.seed);
        std::uint32_t field = p;
        auto attempt = [&](std::uint32_t fp) {
            Options of = o;
            of.p = fp;
            Report m2;
            rep::TreeRep tr(rep::build_M(load_config(doc, of, m2)));
            Report wit = Report::array();
            for (int rank : o.ranks) {
                for (const auto& t : strata::enumerate_strata(tr.geom(), strata::ambient_multiplicities(tr), rank)) {
                    rep::SubRep u = strata::realize_stratum(tr, rank, t, rng);
                    bool phi_ok = strata::phi(tr, u) == t;
                    ok = ok && phi_ok;
                    wit.push_back({{"r", rank}, {"tuple", t}, {"phi_matches", phi_ok}, {"projective", rep::is_projective(tr, u)}, {"spaces", subrep_json(u)}});
                }
            }
            return wit;
        };
        Report witnesses;
        while (true) {
            try {
                witnesses = attempt(field);
                break;
            } catch (const RealizationFailed&) {
                if (doc.kind == SourceKind::lattices || field > 1000) throw;
                field = next_prime(field);
            }
        }
        r["realization_field"] = field;
        r["witnesses"] = witnesses;
    }
    if (o.oracle) {
        bool agree = true;
        r["oracle"] = oracle_report(doc, o, o.oracle, o.ranks, agree);
        ok = ok && agree;
    }
    r["ok"] = ok;
    if (!ok) throw Mismatch{r};
    return r;
}

Report cmd_bruteforce(const Options& o) {
    if (o.ranks.empty()) throw InvalidInput("bruteforce needs -r");
    ConfigDocument doc = parse_config(read_file(o.input));
    const std::uint32_t q = o.oracle ? o.oracle : (o.p ? o.p : doc.p);
    Report r;
    r["provenance"] = provenance("bruteforce", doc.raw, o.seed, q);
    bool agree = true;
    r["oracle"] = oracle_report(doc, o, q, o.ranks, agree);
    r["ok"] = agree;
    if (!agree) throw Mismatch{r};
    return r;
}

Report cmd_tropical(const Options& o) {
    TropicalDocument doc = parse_tropical(read_file(o.input));
    tropical::DualGraph g(doc.graph);
    Report r;
    r["provenance"] = provenance("tropical", doc.raw + "|k=" + std::to_string(o.auto_concentrate), o.seed, 0);
    std::vector<bool> conc;
    for (std::size_t i = 0; i < g.size(); ++i) conc.push_back(tropical::is_concentrated(g, doc.concentrated[i], i));
    r["input_concentrated"] = conc;
    auto coeffs = tropical::coefficients_of(g, doc.w0, doc.concentrated);
    if (o.auto_concentrate < 0) throw InvalidInput("--auto-concentrate needs k >= 0");
    coeffs = tropical::concentrate_further(coeffs, o.auto_concentrate);
    std::vector<tropical::Multidegree> wv;
    for (const auto& x : coeffs.a) wv.push_back(tropical::twist_by(g, doc.w0, x));
    r["concentrated"] = wv;
    r["coefficients"] = coeffs.a;
    bool closure_ok = tropical::closure_condition(coeffs);
    r["closure_condition"] = closure_ok;
    std::vector<tropical::TwistVector> closure;
    try {
        closure = tropical::twist_closure_coordinates(coeffs);
    } catch (const InvalidInput&) {
    }
    auto hull = tropical::integral_tropical_hull(coeffs.a);
    Report cl = Report::array(), hl = Report::array();
    for (const auto& x : closure) cl.push_back({{"twists", x}, {"multidegree", tropical::twist_by(g, doc.w0, x)}});
    for (const auto& x : hull) hl.push_back({{"twists", x}, {"multidegree", tropical::twist_by(g, doc.w0, x)}});
    r["closure"] = cl;
    r["hull"] = hl;
    bool contained = std::includes(hull.begin(), hull.end(), closure.begin(), closure.end());
    bool equal = closure == hull;
    r["closure_in_hull"] = contained;
    r["closure_equals_hull"] = equal;
    r["ok"] = contained && (closure_ok == equal);
    if (!r["ok"].get<bool>()) throw Mismatch{r};
    return r;
}

Report cmd_hull(const Options& o) {
    HullDocument doc = parse_hull(read_file(o.input));
    Report r;
    r["provenance"] = provenance("hull", doc.raw, o.seed, 0);
    std::vector<tropical::TwistVector> pts = doc.points;
    std::optional<tropical::DualGraph> g;
    if (doc.graph) {
        g.emplace(*doc.graph);
        pts.clear();
        for (const auto& w : doc.points) {
            auto x = tropical::twist_coordinates(*g, *doc.w0, w);
            if (!x) throw InvalidInput("a point is not reachable from w0 by twists");
            pts.push_back(*x);
        }
    }
    auto hull = tropical::integral_tropical_hull(pts);
    Report list = Report::array();
    for (const auto& x : hull) {
        if (g)
            list.push_back({{"twists", x}, {"multidegree", tropical::twist_by(*g, *doc.w0, x)}});
        else
            list.push_back(x);
    }
    r["size"] = hull.size();
    r["hull"] = list;
    return r;
}

Report cmd_curve_example(const Options& o) {
    tropical::Multidegree w0 = o.w0.empty() ? tropical::Multidegree{1, 1, 1} : o.w0;
    if (w0.size() != 3) throw InvalidInput("--w0 needs three entries");
    if (!tropical::cycle_admissible(o.n12, o.n13, o.n23, w0)) throw InvalidInput("w0 must satisfy a_i < 2 min_{j != i} n_{i,j}");
    std::uint32_t p = o.p ? o.p : 7;
    int most = std::max({o.n12 + o.n13, o.n12 + o.n23, o.n13 + o.n23});
    while (p < static_cast<std::uint32_t>(most)) p = next_prime(p);
    std::ostringstream key;
    key << o.n12 << "," << o.n13 << "," << o.n23 << "|" << w0[0] << "," << w0[1] << "," << w0[2];
    Report r;
    r["provenance"] = provenance("curve-example", key.str(), o.seed, p);
    auto ex = tropical::cycle_curve_example(p, o.n12, o.n13, o.n23, w0);
    auto rep = tropical::verify_cycle_example(ex);
    r["n"] = {o.n12, o.n13, o.n23};
    r["w0"] = w0;
    r["divisor"] = ex.divisor;
    r["concentrated"] = ex.wv;
    Report vs = Report::array();
    for (std::size_t i = 0; i < rep.fiber.vertices.size(); ++i)
        vs.push_back({{"multidegree", rep.fiber.multidegrees[i]}, {"h0", rep.h0_dims[i]}, {"class", rep.fiber.class_of[i]}});
    r["closure"] = vs;
    r["expected_h0"] = rep.expected_h0;
    r["h1_vanishes"] = rep.h1_vanishes;
    r["closure_matches"] = rep.closure_matches;
    r["boundary_isomorphisms"] = rep.boundary_isomorphisms;
    r["kernel_dims"] = rep.kernel_dims;
    r["expected_kernel_dims"] = rep.expected_kernel_dims;
    r["images_are_kernels"] = rep.images_are_kernels;
    r["kernels_independent"] = rep.kernels_independent;
    r["classes"] = rep.fiber.classes();
    r["star"] = rep.star;
    r["chain"] = rep.chain;
    r["gamma_s_exponents"] = rep.gamma.exponents;
    r["gamma_s_document"] = {{"p", p}, {"d", rep.expected_h0}, {"exponents", rep.gamma.exponents}};
    bool ok = rep.ok();
    bool pseudo_compact = o.n12 == 0 || o.n13 == 0 || o.n23 == 0;
    if (pseudo_compact) ok = ok && rep.chain;
    if (o.analyze) r["analysis"] = analysis(rep.gamma.config, default_ranks(o, rep.gamma.config.dim()));
    r["ok"] = ok;
    if (!ok) throw Mismatch{r};
    return r;
}

Report cmd_counterexample(const Options& o) {
    const std::uint32_t p = o.p ? o.p : 3;
    Report r;
    r["provenance"] = provenance("counterexample", "two-lattice fixture", o.seed, p);
    auto cfg = dvr::config_from_exponents(p, {{0, 0, 0, 0}, {-1, 0, 0, 0}});
    rep::SubRep point{{strata::from_pluecker(p, 4, 2, {1, 0, 0, 0, 0, 0}), strata::from_pluecker(p, 4, 2, {0, 0, 0, 1, 0, 1})}};
    auto check = strata::pluecker_check(cfg, 1, point);
    r["pluecker"] = check.coordinates;
    r["compounds"] = {exponent_rows(check.compounds[0]), exponent_rows(check.compounds[1])};
    r["transported"] = check.transported;
    r["minors_vanish"] = check.minors_vanish;
    r["linked"] = check.linked;
    r["discrepancy"] = check.discrepancy();

    // Points on actual components pass both tests.
    std::mt19937_64 rng(o.seed);
    rep::TreeRep tr(rep::build_M(cfg));
    auto d = strata::ambient_multiplicities(tr);
    Report wit = Report::array();
    bool witnesses_ok = true;
    for (const auto& rv : strata::components(tr.geom(), d, 2)) {
        auto u = strata::realize_stratum(tr, 2, strata::component_image(tr.geom(), rv), rng);
        auto c = strata::pluecker_check(cfg, 1, u);
        witnesses_ok = witnesses_ok && c.minors_vanish && c.linked;
        wit.push_back({{"label", rv}, {"pluecker", c.coordinates}, {"minors_vanish", c.minors_vanish}, {"linked", c.linked}});
    }
    r["component_witnesses"] = wit;

    // For lines the two tests agree everywhere over F_2.
    auto cfg2 = dvr::config_from_exponents(2, {{0, 0, 0, 0}, {-1, 0, 0, 0}});
    auto lines = strata::grassmannian(2, 4, 1);
    std::size_t pairs = 0, disagreements = 0;
    for (const auto& a : lines)
        for (const auto& b : lines) {
            auto c = strata::pluecker_check(cfg2, 1, rep::SubRep{{a, b}});
            ++pairs;
            if (c.minors_vanish != c.linked) ++disagreements;
        }
    r["rank_one_pairs_checked"] = pairs;
    r["rank_one_disagreements"] = disagreements;
    bool ok = check.discrepancy() && witnesses_ok && disagreements == 0;
    r["ok"] = ok;
    if (!ok) throw Mismatch{r};
    return r;
}

void emit(const Report& r, const Options& o, std::ostream& out) {
    out << (o.pretty ? render_pretty(r) : r.dump()) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lattice configurations, their quiver Grassmannians and limit linear series"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "prime overriding the document");
        sub->add_option("--seed", o.seed, "seed for every random choice");
        sub->add_flag("--pretty", o.pretty, "render tables instead of JSON");
    };
    auto with_input = [&](CLI::App* sub) { sub->add_option("input", o.input, "input document")->required(); };

    auto* analyze = app.add_subcommand("analyze", "quiver, relations, local independence and strata");
    common(analyze);
    with_input(analyze);
    analyze->add_flag("--close", o.close, "replace the input by its convex closure");
    analyze->add_option("-r", o.ranks, "ranks to classify (default: all)");

    auto* strata_cmd = app.add_subcommand("strata", "admissible tuples and components for rank r");
    common(strata_cmd);
    with_input(strata_cmd);
    strata_cmd->add_flag("--close", o.close, "replace the input by its convex closure");
    strata_cmd->add_option("-r", o.ranks, "rank")->required();
    strata_cmd->add_flag("--realize", o.realize, "construct a witness in every stratum");
    strata_cmd->add_option("--oracle", o.oracle, "cross-check by enumeration over F_q");
    strata_cmd->add_option("--budget", o.budget, "enumeration budget in candidate checks");

    auto* brute = app.add_subcommand("bruteforce", "enumerate the quiver Grassmannian over F_q");
    common(brute);
    with_input(brute);
    brute->add_flag("--close", o.close, "replace the input by its convex closure");
    brute->add_option("-r", o.ranks, "rank")->required();
    brute->add_option("--oracle,-q", o.oracle, "field size q (default: the document prime)");
    brute->add_option("--budget", o.budget, "enumeration budget in candidate checks");

    auto* trop = app.add_subcommand("tropical", "twist closure, hull and the concentration condition");
    common(trop);
    with_input(trop);
    trop->add_option("--auto-concentrate", o.auto_concentrate, "extra negative twists at each v");

    auto* hull = app.add_subcommand("hull", "integral tropical hull of a point set");
    common(hull);
    with_input(hull);

    auto* curve = app.add_subcommand("curve-example", "three rational components meeting pairwise");
    common(curve);
    curve->add_option("--n12", o.n12, "nodes between Z_1 and Z_2");
    curve->add_option("--n13", o.n13, "nodes between Z_1 and Z_3");
    curve->add_option("--n23", o.n23, "nodes between Z_2 and Z_3");
    curve->add_option("--w0", o.w0, "multidegree a_1 a_2 a_3")->delimiter(',');
    curve->add_flag("--analyze", o.analyze, "analyse the resulting configuration");
    curve->add_option("-r", o.ranks, "ranks for --analyze");

    auto* counter = app.add_subcommand("counterexample", "equational test versus linked points");
    common(counter);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Report r;
        if (analyze->parsed()) r = cmd_analyze(o);
        else if (strata_cmd->parsed()) r = cmd_strata(o);
        else if (brute->parsed()) r = cmd_bruteforce(o);
        else if (trop->parsed()) r = cmd_tropical(o);
        else if (hull->parsed()) r = cmd_hull(o);
        else if (curve->parsed()) r = cmd_curve_example(o);
        else r = cmd_counterexample(o);
        emit(r, o, out);
        return kOk;
    } catch (const Mismatch& m) {
        emit(m.report, o, out);
        err << "error: verification mismatch\n";
        return kMismatch;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace lq::cli
