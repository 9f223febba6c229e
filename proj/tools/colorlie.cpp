// colorlie: exact verification and codimension computations for the
// Z2xZ2-graded color Lie superalgebras L = F[G] (x) B.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "colorlie/codim.hpp"
#include "colorlie/constructions.hpp"
#include "colorlie/io.hpp"
#include "colorlie/rank.hpp"
#include "colorlie/tableaux.hpp"
#include "colorlie/version.hpp"

using namespace colorlie;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::string algebra = "L";
    std::string cocycle = "canonical";
    std::string format = "tsv";
    std::string out;
    std::string dump_algebra;
    std::uint64_t seed = 1;
    std::vector<std::uint64_t> primes;
    std::string mode = "exact";
    long long max_columns = 1'000'000;
};

SignTable resolve_cocycle(const std::string& name) {
    if (name == "canonical") return canonical_cocycle();
    if (name == "literal") return literal_cocycle_candidate();
    if (name == "trivial") return trivial_cocycle();
    return sign_table_from_json(load_json_file(name));
}

GradedAlgebra resolve_algebra(const GlobalOpts& g) {
    auto make = [&]() -> GradedAlgebra {
        if (g.algebra == "sl2") return sl2_factory();
        if (g.algebra == "sl3") return sln_factory(3);
        if (g.algebra == "sl2+sl2") return direct_sum(sl2_factory(), sl2_factory());
        if (g.algebra == "L")
            return tensor_color_construct(sl2_factory(), resolve_cocycle(g.cocycle));
        if (g.algebra == "L3")
            return tensor_color_construct(sln_factory(3), resolve_cocycle(g.cocycle));
        return algebra_from_json(load_json_file(g.algebra));
    };
    GradedAlgebra A = make();
    if (!g.dump_algebra.empty()) save_json_file(g.dump_algebra, algebra_to_json(A));
    return A;
}

CodimOptions codim_options(const GlobalOpts& g) {
    CodimOptions o;
    o.mode = g.mode == "randomized" ? CodimOptions::Mode::Randomized : CodimOptions::Mode::Exact;
    o.seed = g.seed;
    if (!g.primes.empty()) o.primes = g.primes;
    o.max_coord_columns = g.max_columns;
    return o;
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot open " + g.out);
    f << text;
}

std::string command_line(const std::string& sub, const GlobalOpts& g,
                         const std::string& extra = "") {
    std::ostringstream os;
    os << sub << " --algebra " << g.algebra << " --cocycle " << g.cocycle << " --mode " << g.mode
       << " --seed " << g.seed;
    if (!g.primes.empty()) {
        os << " --prime ";
        for (std::size_t t = 0; t < g.primes.size(); ++t) {
            if (t) os << ',';
            os << g.primes[t];
        }
    }
    if (!extra.empty()) os << ' ' << extra;
    return os.str();
}

std::string report_text(const GlobalOpts& g, const CodimReport& rep, const std::string& cmd) {
    RunInfo info{cmd, kVersion};
    if (g.format == "json") return codim_report_to_json(rep, info).dump(2) + "\n";
    return codim_report_to_tsv(rep, info);
}

// the bicharacter to check against: derived from the cocycle when it is a
// valid cocycle, the canonical one otherwise
Bicharacter resolve_beta(const std::string& cocycle_name, bool& derived) {
    SignTable s = resolve_cocycle(cocycle_name);
    if (validate_cocycle(s).valid()) {
        derived = true;
        return bicharacter_from_cocycle(s);
    }
    derived = false;
    return bicharacter_from_cocycle(canonical_cocycle());
}

int cmd_axioms(const GlobalOpts& g) {
    GradedAlgebra A = resolve_algebra(g);
    bool derived = false;
    Bicharacter beta = resolve_beta(g.cocycle, derived);
    ColorAxiomReport rep = check_color_axioms(A, beta);

    std::ostringstream os;
    Json j;
    j["command"] = command_line("axioms", g);
    j["version"] = kVersion;
    j["algebra"] = A.name;
    j["beta"] = derived ? "from-cocycle" : "canonical (cocycle table is not a cocycle)";
    j["pairs_checked"] = rep.pairs_checked;
    j["triples_checked"] = rep.triples_checked;
    j["violations"] = rep.violation_count;
    Json viol = Json::array();
    for (const auto& v : rep.violations) {
        Json e;
        e["axiom"] = v.axiom;
        e["indices"] = v.indices;
        e["defect"] = vec_to_json(v.defect);
        viol.push_back(e);
    }
    j["violation_list"] = viol;
    if (g.format == "json") {
        os << j.dump(2) << '\n';
    } else {
        os << "# " << command_line("axioms", g) << "\tversion " << kVersion << '\n';
        os << "algebra\tpairs\ttriples\tviolations\n";
        os << A.name << '\t' << rep.pairs_checked << '\t' << rep.triples_checked << '\t'
           << rep.violation_count << '\n';
        for (const auto& v : rep.violations) {
            os << v.axiom << '\t';
            for (std::size_t t = 0; t < v.indices.size(); ++t) {
                if (t) os << ',';
                os << v.indices[t];
            }
            os << '\n';
        }
    }
    emit(g, os.str());
    return rep.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_iso_check(const GlobalOpts& g) {
    SignTable s = resolve_cocycle(g.cocycle);
    GroupRingCheck chk = group_ring_matrix_check(s);
    std::ostringstream os;
    os << "# " << command_line("iso-check", g) << "\tversion " << kVersion << '\n';
    os << "pair\tok\n";
    for (GroupElement x : group_elements())
        for (GroupElement y : group_elements())
            os << x.to_string() << '*' << y.to_string() << '\t'
               << (chk.pair_ok[x.index()][y.index()] ? "pass" : "FAIL") << '\n';
    os << "all\t" << (chk.all_ok ? "pass" : "FAIL") << '\n';
    emit(g, os.str());
    return chk.all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_killing(const GlobalOpts& g) {
    GradedAlgebra A = resolve_algebra(g);
    Mat K = killing_matrix(A);
    bool symmetric = true;
    for (int r = 0; r < A.dim && symmetric; ++r)
        for (int c = 0; c < A.dim; ++c)
            if (K(r, c) != K(c, r)) {
                symmetric = false;
                break;
            }
    long long off_block_nonzero = 0, off_block_total = 0;
    for (int r = 0; r < A.dim; ++r)
        for (int c = 0; c < A.dim; ++c)
            if (!(A.degrees[r] == A.degrees[c])) {
                ++off_block_total;
                if (K(r, c) != 0) ++off_block_nonzero;
            }
    Rat det = det_bareiss(K);

    std::ostringstream os;
    os << "# " << command_line("killing", g) << "\tversion " << kVersion << '\n';
    os << "algebra\tdim\tsymmetric\tdet\toff_block_entries\toff_block_nonzero\n";
    os << A.name << '\t' << A.dim << '\t' << (symmetric ? "yes" : "no") << '\t'
       << rat_to_string(det) << '\t' << off_block_total << '\t' << off_block_nonzero << '\n';
    for (GroupElement ge : group_elements()) {
        auto idx = A.basis_of_degree(ge);
        if (idx.empty()) continue;
        Mat blk(idx.size(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) blk(r, c) = K(idx[r], idx[c]);
        os << "block_" << ge.to_string() << "_det\t" << rat_to_string(det_bareiss(blk)) << '\n';
    }
    emit(g, os.str());
    return kExitOk;
}

int cmd_simple_check(const GlobalOpts& g) {
    GradedAlgebra A = resolve_algebra(g);
    SimplicityReport rep = is_graded_simple(A);
    std::ostringstream os;
    os << "# " << command_line("simple-check", g) << "\tversion " << kVersion << '\n';
    os << "algebra\tsimple\tzero_product\twitness_dim\tgenerator\n";
    os << A.name << '\t' << (rep.simple ? "yes" : "no") << '\t'
       << (rep.zero_product ? "yes" : "no") << '\t' << rep.witness.size() << '\t'
       << rep.generator_index << '\n';
    for (const Vec& w : rep.witness) {
        os << "witness\t";
        for (int i = 0; i < w.size(); ++i) {
            if (i) os << ',';
            os << rat_to_string(w[i]);
        }
        os << '\n';
    }
    emit(g, os.str());
    return rep.simple ? kExitOk : kExitCheckFailed;
}

int cmd_codim(const GlobalOpts& g, int n, bool lie) {
    GradedAlgebra A = resolve_algebra(g);
    CodimOptions opts = codim_options(g);
    CodimReport rep = lie ? codim_lie(A, n, opts) : codim_plain(A, n, opts);
    std::string extra = "--n " + std::to_string(n) + (lie ? " --lie" : "");
    emit(g, report_text(g, rep, command_line("codim", g, extra)));
    return kExitOk;
}

int cmd_graded_codim(const GlobalOpts& g, int n, const std::string& key_str) {
    GradedAlgebra L = resolve_algebra(g);
    CodimOptions opts = codim_options(g);
    CodimReport rep;
    std::string extra = "--n " + std::to_string(n);
    if (key_str.empty()) {
        rep = codim_graded_total(L, n, opts);
    } else {
        std::array<int, 4> key{};
        if (std::sscanf(key_str.c_str(), "%d,%d,%d,%d", &key[0], &key[1], &key[2], &key[3]) != 4)
            throw std::runtime_error("--key expects k1,k2,k3,k4");
        rep = codim_graded_component(L, key, opts);
        extra += " --key " + key_str;
    }
    emit(g, report_text(g, rep, command_line("graded-codim", g, extra)));
    return kExitOk;
}

int cmd_trend(const GlobalOpts& g, int n_max) {
    GradedAlgebra A = resolve_algebra(g);
    CodimOptions opts = codim_options(g);
    auto rows = exponent_trend(A, n_max, opts);
    std::ostringstream os;
    const std::string cmd = command_line("trend", g, "--n-max " + std::to_string(n_max));
    if (g.format == "json") {
        Json j;
        j["command"] = cmd;
        j["version"] = kVersion;
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json e;
            e["n"] = r.n;
            e["c_n"] = r.c_n;
            e["root"] = format_double(r.root);
            if (r.has_ratio) e["ratio"] = format_double(r.ratio);
            arr.push_back(e);
        }
        j["rows"] = arr;
        os << j.dump(2) << '\n';
    } else {
        os << "# " << cmd << "\tversion " << kVersion << '\n';
        os << "n\tc_n\troot\tratio\n";
        for (const auto& r : rows) {
            os << r.n << '\t' << r.c_n << '\t' << format_double(r.root) << '\t'
               << (r.has_ratio ? format_double(r.ratio) : "-") << '\n';
        }
    }
    emit(g, os.str());
    return kExitOk;
}

int cmd_search_witness(const GlobalOpts& g, long long trials) {
    GradedAlgebra B = resolve_algebra(g);
    WitnessSearchResult res = find_alternating_nonidentity(B, trials, g.seed);
    if (!res.found) {
        std::cerr << "no witness found within " << res.trials_used << " trials\n";
        return kExitCheckFailed;
    }
    Json j = witness_to_json(*res.witness);
    j["trials_used"] = res.trials_used;
    j["block_sizes"] = res.block_sizes;
    emit(g, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_lemmas(const GlobalOpts& g, const std::string& which, int k, const std::string& witness_file,
               int evals) {
    GradedAlgebra B = g.algebra == "L" ? sl2_factory() : resolve_algebra(g);
    std::ostringstream os;
    os << "# " << command_line("lemmas", g, "--which " + which + " --k " + std::to_string(k)) << "\tversion "
       << kVersion << '\n';
    bool all_ok = true;
    std::mt19937_64 rng(g.seed);

    WitnessPolynomial w;
    if (!witness_file.empty()) {
        w = witness_from_json(load_json_file(witness_file));
    } else {
        auto res = find_alternating_nonidentity(B, 4096, g.seed);
        if (!res.found) {
            os << "witness\tFAIL (search exhausted)\n";
            emit(g, os.str());
            return kExitCheckFailed;
        }
        w = *res.witness;
    }
    os << "witness\t" << w.poly.terms().begin()->first.to_string() << '\n';
    MultilinearPoly falt = alt_on_set(w.poly, w.alt_set);

    if (which == "all" || which == "l4") {
        // alternation preservation: repeated vector kills the inserted sum
        int next = falt.variables().back() + 1;
        MultilinearPoly ins = insert_bracket_sum(falt, w.alt_set, next, next + 1);
        bool ok = true;
        for (int t = 0; t < evals && ok; ++t) {
            Assignment e;
            for (int v : ins.variables()) e[v] = random_small_vec(B.dim, rng);
            e[w.alt_set[1]] = e[w.alt_set[0]];
            ok = is_zero(evaluate(ins, B, e));
        }
        os << "l4\t" << (ok ? "pass" : "FAIL") << '\n';
        all_ok &= ok;
    }
    if (which == "all" || which == "l5") {
        bool ok = true;
        for (int kk = 1; kk <= std::max(k, 1) && ok; ++kk) {
            for (int t = 0; t < evals && ok; ++t) {
                Assignment e;
                for (int v : falt.variables()) e[v] = random_small_vec(B.dim, rng);
                std::vector<std::pair<Vec, Vec>> pairs;
                for (int s = 0; s < kk; ++s)
                    pairs.emplace_back(random_small_vec(B.dim, rng), random_small_vec(B.dim, rng));
                ok = trace_extract(falt, w.alt_set, pairs, B, e).equal;
            }
        }
        os << "l5\t" << (ok ? "pass" : "FAIL") << '\n';
        all_ok &= ok;
    }
    if (which == "all" || which == "p1") {
        bool ok = true;
        for (int t = 0; t < std::min(evals, 5) && ok; ++t) {
            DeterminantIdentityRecord rec = determinant_identity_check(falt, w.alt_set, B, k, rng());
            ok = rec.equal && rec.alternating_ok;
        }
        os << "p1\t" << (ok ? "pass" : "FAIL") << '\n';
        all_ok &= ok;
    }
    if (which == "all" || which == "n3-lift") {
        GradedAlgebra L = tensor_color_construct(B, canonical_cocycle());
        LiftRecord rec = lift_to_L(w, L, B, canonical_cocycle(), g.seed, 2000);
        bool ok = rec.nonzero && rec.cross_nonzero == 0;
        os << "n3-lift\t" << (ok ? "pass" : "FAIL") << "\tconnector_attempts "
           << rec.connector_attempts << "\tcross_samples " << rec.cross_samples << '\n';
        all_ok &= ok;
    }
    emit(g, os.str());
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_tableaux(const GlobalOpts& g, int n, const std::string& rect) {
    std::ostringstream os;
    if (!rect.empty()) {
        int q = 0, k = 0;
        if (std::sscanf(rect.c_str(), "%d,%d", &q, &k) != 2)
            throw std::runtime_error("--rect expects q,k");
        RectangleBound rb = rectangle_bound(q, k);
        os << "# " << command_line("tableaux", g, "--rect " + rect) << "\tversion " << kVersion
           << '\n';
        os << "shape\tn\tdim\tbound\tholds\troot\n";
        os << rb.shape.to_string() << '\t' << rb.n << '\t' << rb.dim.get_str() << '\t'
           << format_double(rb.bound) << '\t' << (rb.holds ? "yes" : "no") << '\t'
           << format_double(rb.root) << '\n';
        emit(g, os.str());
        return kExitOk;
    }
    os << "# " << command_line("tableaux", g, "--n " + std::to_string(n)) << "\tversion "
       << kVersion << '\n';
    os << "partition\thook_dim\tstandard_count\n";
    Int sumsq = 0;
    bool ok = true;
    for (const Partition& p : partitions_of(n)) {
        Int hd = hook_dim(p);
        Int sc = standard_tableau_count(p);
        if (hd != sc) ok = false;
        sumsq += hd * hd;
        os << p.to_string() << '\t' << hd.get_str() << '\t' << sc.get_str() << '\n';
    }
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    os << "sum_of_squares\t" << sumsq.get_str() << "\tn!\t" << fact.get_str() << '\n';
    if (sumsq != fact) ok = false;
    emit(g, os.str());
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact color-Lie-superalgebra toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--algebra", g.algebra, "sl2 | sl3 | sl2+sl2 | L | L3 | spec file path");
    app.add_option("--cocycle", g.cocycle, "canonical | literal | trivial | table file path");
    app.add_option("--format", g.format, "tsv | json")->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--out", g.out, "write the report to a file");
    app.add_option("--dump-algebra", g.dump_algebra, "also write the resolved algebra spec file");
    app.add_option("--seed", g.seed, "master seed");
    app.add_option("--prime", g.primes, "prime(s) for randomized mode (repeatable)");
    app.add_option("--mode", g.mode, "exact | randomized")
        ->check(CLI::IsMember({"exact", "randomized"}));
    app.add_option("--max-columns", g.max_columns, "exact-mode column guard override");

    auto* ax = app.add_subcommand("axioms", "check the color axioms");
    auto* iso = app.add_subcommand("iso-check", "twisted group ring vs 2x2 matrices");
    auto* kil = app.add_subcommand("killing", "Killing form structure report");
    auto* smp = app.add_subcommand("simple-check", "graded simplicity");
    auto* cod = app.add_subcommand("codim", "codimension c_n");
    auto* gco = app.add_subcommand("graded-codim", "graded codimension");
    auto* trd = app.add_subcommand("trend", "codimension trend report");
    auto* lem = app.add_subcommand("lemmas", "multialternating-polynomial checks");
    auto* srw = app.add_subcommand("search-witness", "find an alternating non-identity");
    auto* tab = app.add_subcommand("tableaux", "hook dimensions and rectangle bounds");
    for (CLI::App* sub : {ax, iso, kil, smp, cod, gco, trd, lem, srw, tab}) sub->fallthrough();

    int n = 2, n_max = 3, kk = 1, evals = 25, tab_n = 5;
    bool lie = false;
    std::string key_str, which = "all", witness_file, rect;
    long long trials = 4096;

    cod->add_option("--n", n, "degree");
    cod->add_flag("--lie", lie, "left-normed rows (Lie codimension)");
    gco->add_option("--n", n, "degree");
    gco->add_option("--key", key_str, "component k1,k2,k3,k4");
    trd->add_option("--n-max", n_max, "largest degree");
    lem->add_option("--which", which, "all | l4 | l5 | p1 | n3-lift");
    lem->add_option("--k", kk, "iteration depth");
    lem->add_option("--witness", witness_file, "replay a serialized witness");
    lem->add_option("--evals", evals, "seeded evaluations per check");
    srw->add_option("--trials", trials, "evaluation budget");
    tab->add_option("--n", tab_n, "list partitions of n");
    tab->add_option("--rect", rect, "rectangle bound for q,k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (ax->parsed()) return cmd_axioms(g);
        if (iso->parsed()) return cmd_iso_check(g);
        if (kil->parsed()) return cmd_killing(g);
        if (smp->parsed()) return cmd_simple_check(g);
        if (cod->parsed()) return cmd_codim(g, n, lie);
        if (gco->parsed()) return cmd_graded_codim(g, n, key_str);
        if (trd->parsed()) return cmd_trend(g, n_max);
        if (lem->parsed()) return cmd_lemmas(g, which, kk, witness_file, evals);
        if (srw->parsed()) return cmd_search_witness(g, trials);
        if (tab->parsed()) return cmd_tableaux(g, tab_n, rect);
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
