// Batch command-line interface: every computation exposed with
// deterministic, machine-readable output (JSON by default, DOT for the
// diagram subcommands). Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>

#include <iostream>

#include "fusedhecke/golden.hpp"
#include "fusedhecke/json_io.hpp"

using namespace fh;

namespace {

struct WeightOpt {
    std::string spec;  // "2,2,2" or "const:2"
    int n = -1;        // length for const: form, or override

    // Returns the first n entries, repeating the last one if the listed
    // prefix is shorter (matching the infinite-sequence convention); warns
    // on stderr when the extension is used.
    Composition resolve(int length = -1) const {
        Composition base;
        if (spec.rfind("const:", 0) == 0) {
            int v = std::stoi(spec.substr(6));
            require(n >= 1 || length >= 1, "const: weight needs --n");
            base.assign(static_cast<std::size_t>(n >= 1 ? n : length), v);
        } else {
            std::string tok;
            for (char c : spec) {
                if (c == ',') {
                    base.push_back(std::stoi(tok));
                    tok.clear();
                } else {
                    tok += c;
                }
            }
            if (!tok.empty()) base.push_back(std::stoi(tok));
        }
        require(!base.empty(), "empty weight sequence");
        int want = length >= 1 ? length : (n >= 1 ? n : static_cast<int>(base.size()));
        if (want > static_cast<int>(base.size())) {
            std::cerr << "note: extending the weight sequence by repeating " << base.back()
                      << "\n";
            while (static_cast<int>(base.size()) < want) base.push_back(base.back());
        }
        base.resize(static_cast<std::size_t>(want));
        return base;
    }
};

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    for (char c : s) {
        if (c == ',') {
            out.push_back(std::stoi(tok));
            tok.clear();
        } else {
            tok += c;
        }
    }
    if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

std::vector<Rat> parse_points(const std::vector<std::string>& specs) {
    std::vector<Rat> pts;
    for (const auto& s : specs) pts.push_back(parse_rat(s));
    return pts;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in fused Hecke algebras and their centraliser quotients"};
    app.require_subcommand(1);

    WeightOpt weight;
    int N_opt = -1, n_max = 3;
    std::string a_spec, b_spec, shape_spec, weight_spec, lambda_spec, output = "json";
    bool classical = false, sweep = false, dump_matrices = false;
    std::vector<std::string> q_specs = {"7/5", "9/7", "11/8"};
    int max_sum = 7, symbolic_centrality_max = 6, symbolic_ideal_max = 5;

    auto add_k = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--k", weight.spec, "weight sequence, e.g. 2,2,2 or const:2");
        if (required) opt->required();
        cmd->add_option("--n", weight.n, "number of blocks (for const: weights or overrides)");
    };

    auto* dim_cmd = app.add_subcommand("dim", "dimension of the fused algebra");
    add_k(dim_cmd);

    auto* basis_cmd = app.add_subcommand("basis", "standard basis matrices");
    add_k(basis_cmd);

    auto* mul_cmd = app.add_subcommand("mul", "product of two basis elements");
    add_k(mul_cmd);
    mul_cmd->add_option("--a", a_spec, "left factor: basis index or JSON matrix")->required();
    mul_cmd->add_option("--b", b_spec, "right factor: basis index or JSON matrix")->required();
    mul_cmd->add_flag("--classical", classical, "use the q=1 combinatorial product");

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number");
    kostka_cmd->add_option("--shape", shape_spec, "partition, e.g. 4,4")->required();
    kostka_cmd->add_option("--weight", weight_spec, "composition, e.g. 2,2,2,2")->required();

    auto* sset_cmd = app.add_subcommand("sset", "irreducible labels of the fused algebra");
    add_k(sset_cmd);

    auto* brat_cmd = app.add_subcommand("bratteli", "branching diagram of the chain");
    add_k(brat_cmd);
    brat_cmd->add_option("--n-max", n_max, "depth")->required();
    brat_cmd->add_option("--output", output, "json or dot");

    auto* cent_cmd = app.add_subcommand("centralizer-diagram",
                                        "branching diagram of the centraliser quotient");
    add_k(cent_cmd);
    cent_cmd->add_option("--N", N_opt, "gl rank")->required();
    cent_cmd->add_option("--n-max", n_max, "depth")->required();
    cent_cmd->add_option("--output", output, "json or dot");

    auto* irrep_cmd = app.add_subcommand("irrep", "matrices of one irreducible representation");
    add_k(irrep_cmd);
    irrep_cmd->add_option("--lambda", lambda_spec, "partition label")->required();

    auto* sw_cmd = app.add_subcommand("sw-rank", "dimension of the image on the tensor space");
    add_k(sw_cmd);
    sw_cmd->add_option("--N", N_opt, "gl rank")->required();
    sw_cmd->add_option("--q", q_specs, "sample points, e.g. 7/5");
    sw_cmd->add_flag("--dump-matrices", dump_matrices,
                     "also emit the image matrix of every basis element (sparse triplets)");

    auto* conj_cmd = app.add_subcommand(
        "check-conjectures", "centrality and kernel generation of the fused antisymmetriser");
    add_k(conj_cmd, false);
    conj_cmd->add_option("--N", N_opt, "gl rank");
    conj_cmd->add_flag("--sweep", sweep, "run every case within the budget");
    conj_cmd->add_option("--max-sum", max_sum, "budget: largest k_1+...+k_{N+1}");
    conj_cmd->add_option("--symbolic-centrality-max", symbolic_centrality_max,
                         "largest weight sum checked symbolically for centrality");
    conj_cmd->add_option("--symbolic-ideal-max", symbolic_ideal_max,
                         "largest weight sum with symbolic rank confirmation");
    conj_cmd->add_option("--q", q_specs, "sample points");
    conj_cmd->add_option("--output", output, "json or table");

    auto* golden_cmd = app.add_subcommand("golden", "run the worked-example fixture suite");
    (void)golden_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dim_cmd->parsed()) {
            Composition k = weight.resolve();
            emit(json(enumerate_fused(Blocks(k)).size()));
        } else if (basis_cmd->parsed()) {
            Composition k = weight.resolve();
            json arr = json::array();
            for (const FusedPerm& f : enumerate_fused(Blocks(k))) arr.push_back(to_json(f));
            emit(arr);
        } else if (mul_cmd->parsed()) {
            Composition k = weight.resolve();
            FusedAlg<SymbolicQ> alg{Blocks(k)};
            auto pick = [&](const std::string& s) {
                if (!s.empty() && s[0] == '[') return fused_perm_from_json(s);
                return alg.basis().at(static_cast<std::size_t>(std::stol(s)));
            };
            FusedPerm a = pick(a_spec), b = pick(b_spec);
            if (classical) {
                FusedAlg<ClassicalQ> calg{Blocks(k)};
                auto prod = calg.multiply_classical(calg.basis_elem(a), calg.basis_elem(b));
                json arr = json::array();
                for (const auto& [f, c] : prod.terms)
                    arr.push_back(json::array({to_json(f), to_string(c)}));
                emit(arr);
            } else {
                emit(to_json(alg.multiply_q(alg.basis_elem(a), alg.basis_elem(b))));
            }
        } else if (kostka_cmd->parsed()) {
            emit(json(kostka(Partition(parse_ints(shape_spec)), parse_ints(weight_spec))));
        } else if (sset_cmd->parsed()) {
            Composition k = weight.resolve();
            json arr = json::array();
            for (const Partition& lam : s_set(k, static_cast<int>(k.size())))
                arr.push_back(to_json(lam));
            emit(arr);
        } else if (brat_cmd->parsed()) {
            Composition k = weight.resolve(n_max);
            BratteliDiagram d = build_chain(k, n_max);
            if (output == "dot")
                std::cout << to_dot(d);
            else
                emit(to_json(d));
        } else if (cent_cmd->parsed()) {
            Composition k = weight.resolve(n_max);
            BratteliDiagram d = centralizer_diagram(k, N_opt, n_max);
            if (output == "dot")
                std::cout << to_dot(d);
            else
                emit(to_json(d));
        } else if (irrep_cmd->parsed()) {
            Composition k = weight.resolve();
            int n = static_cast<int>(k.size());
            FusedIrrep<SymbolicQ> irr(Partition(parse_ints(lambda_spec)), k, n);
            FusedAlg<SymbolicQ> alg{Blocks(k)};
            json out;
            out["lambda"] = to_json(irr.lambda());
            out["dim"] = irr.dim();
            json tabs = json::array();
            for (const Tableau& t : irr.basis()) tabs.push_back(to_json(t));
            out["basis"] = tabs;
            json mats = json::array();
            for (const FusedPerm& f : alg.basis())
                mats.push_back(json::array({to_json(f), to_json(irr.matrix(f))}));
            out["matrices"] = mats;
            emit(out);
        } else if (sw_cmd->parsed()) {
            Composition k = weight.resolve();
            int n = static_cast<int>(k.size());
            std::vector<Rat> pts = parse_points(q_specs);
            json out;
            out["k"] = k;
            out["N"] = N_opt;
            json per = json::array();
            long rank = -1;
            bool agree = true;
            for (const Rat& q0 : pts) {
                long r = centralizer_dim(k, n, N_opt, q0);
                per.push_back(json{{"q", to_string(q0)}, {"rank", r}});
                if (rank < 0) rank = r;
                agree = agree && (r == rank);
            }
            out["points"] = per;
            out["rank"] = rank;
            out["agree"] = agree;
            if (dump_matrices) {
                Blocks blocks{k};
                TensorRep trep(N_opt, blocks.total(), pts.at(0));
                SparseMat proj = trep.parabolic_projector(blocks);
                json mats = json::array();
                for (const FusedPerm& f : enumerate_fused(blocks)) {
                    SparseMat img = proj * trep.sigma(rep_from_matrix(f, blocks)) * proj;
                    json triplets = json::array();
                    for (long i = 0; i < img.dim; ++i)
                        for (const auto& [jcol, v] : img.rows[i])
                            triplets.push_back(json::array({i, jcol, to_string(v)}));
                    mats.push_back(json{{"basis", to_json(f)}, {"entries", triplets}});
                }
                out["matrices"] = mats;
            }
            emit(out);
            return agree ? 0 : 1;
        } else if (conj_cmd->parsed()) {
            ConjConfig cfg;
            cfg.q_points = parse_points(q_specs);
            cfg.max_sum_k = max_sum;
            cfg.symbolic_centrality_max = symbolic_centrality_max;
            cfg.symbolic_ideal_max = symbolic_ideal_max;
            std::vector<ConjReport> reports;
            if (sweep) {
                reports = sweep_conjectures(cfg);
            } else {
                require(!weight.spec.empty() && N_opt >= 1, "need --k and --N (or --sweep)");
                Composition k = weight.resolve(N_opt + 1);
                reports.push_back(check_conjectures(k, N_opt, cfg));
            }
            bool ok = true;
            for (const auto& rep : reports)
                ok = ok && rep.centrality == CheckStatus::verified &&
                     rep.ideal_generation == CheckStatus::verified;
            if (output == "table") {
                for (const auto& rep : reports) {
                    std::cout << "k=(";
                    for (std::size_t i = 0; i < rep.k.size(); ++i)
                        std::cout << (i ? "," : "") << rep.k[i];
                    std::cout << ") N=" << rep.N << "  centrality=" << to_string(rep.centrality)
                              << "  ideal=" << rep.ideal_dim_computed << "/"
                              << rep.ideal_dim_expected << " " << to_string(rep.ideal_generation)
                              << "  mode=" << rep.q_mode << "\n";
                }
            } else {
                json arr = json::array();
                for (const auto& rep : reports) arr.push_back(to_json(rep));
                emit(sweep ? arr : arr[0]);
            }
            return ok ? 0 : 1;
        } else if (golden_cmd->parsed()) {
            return run_golden(std::cout) == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
