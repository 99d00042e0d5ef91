// monoidlab: primitive sets of words, k-maximal submonoids, binary roots,
// and pseudo-primitivity at the command line.

#include "monoidlab/automata.hpp"
#include "monoidlab/binary_root.hpp"
#include "monoidlab/errors.hpp"
#include "monoidlab/factorization.hpp"
#include "monoidlab/hull.hpp"
#include "monoidlab/primitive.hpp"
#include "monoidlab/sweep.hpp"
#include "monoidlab/theta.hpp"
#include "monoidlab/wordset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::json;
using namespace monoidlab;

namespace {

json to_json(const WordSet& s) {
    json a = json::array();
    for (const Word& w : s) a.push_back(w);
    return a;
}

json to_json(const GeneratorResult& g) {
    json j;
    j["kind"] = g.kind == GeneratorResult::Kind::Finite ? "finite" : "infinite";
    if (g.kind == GeneratorResult::Kind::Finite) {
        j["generators"] = to_json(g.generators);
    } else {
        j["sample"] = g.sample;
        if (g.pump) j["pump"] = g.pump->to_string();
    }
    return j;
}

WordSet parse_set(const std::vector<std::string>& words, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw InvalidPairError("cannot open " + file);
        return WordSet::from_stream(in);
    }
    std::vector<Word> all;
    for (const std::string& w : words) {
        WordSet part = WordSet::from_csv(w);
        all.insert(all.end(), part.begin(), part.end());
    }
    return WordSet(std::move(all));
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

Involution parse_involution(const Alphabet& base, const std::string& spec,
                            const std::string& kind) {
    InvolutionKind k =
        kind == "antimorphic" ? InvolutionKind::Antimorphic : InvolutionKind::Morphic;
    if (spec.empty()) {
        if (k == InvolutionKind::Morphic)
            throw InvalidPairError("a morphic involution needs --theta a:b,b:a,...");
        return Involution::reversal(base);
    }
    // the involution may mention letters beyond those in the inputs
    std::string letters = base.symbols();
    for (char c : spec)
        if (c != ':' && c != ',') letters += c;
    return Involution::parse(Alphabet(letters), spec, k);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"primitive sets of words: codes, hulls, ranks, k-maximal monoids,\n"
                 "binary roots, pseudo-primitivity, and exhaustive verification"};
    app.require_subcommand(1);
    bool as_json = false;
    bool serial = false;
    int workers = 0;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_flag("--serial", serial, "use the serial reference kernels");
    app.add_option("--workers", workers, "worker threads for sweeps (0 = auto)");

    std::vector<std::string> words_arg;
    std::string file, left, right, theta_spec, theta_kind = "morphic", csv_out;
    std::string rank_mode = "exact";
    bool only_small = false, only_all = false;
    SweepConfig cfg;
    bool vt2 = false, vt4 = false, vt5 = false, vt6 = false, vtheta = false;

    auto* c_word = app.add_subcommand("word", "primitivity and classical root of a word");
    c_word->add_option("word", words_arg)->required();

    auto* c_code = app.add_subcommand("code", "code / prefix / suffix / bifix tests");
    c_code->add_option("words", words_arg);
    c_code->add_option("--file", file, "word list file (one per line, # comments)");

    auto* c_hull = app.add_subcommand("hull", "basis of the free hull");
    c_hull->add_option("words", words_arg);
    c_hull->add_option("--file", file);

    auto* c_rank = app.add_subcommand("rank", "combinatorial rank with witness");
    c_rank->add_option("words", words_arg);
    c_rank->add_option("--file", file);
    c_rank->add_option("--mode", rank_mode, "exact | le2")->check(CLI::IsMember({"exact", "le2"}));

    auto* c_graph = app.add_subcommand("graph", "dependency graph and components");
    c_graph->add_option("words", words_arg);
    c_graph->add_option("--file", file);

    auto* c_pair = app.add_subcommand("pair-primitive", "is {x,y} a primitive pair?");
    c_pair->add_option("words", words_arg)->expected(2);

    auto* c_kmax = app.add_subcommand("kmax", "is X* a |X|-maximal submonoid?");
    c_kmax->add_option("words", words_arg);
    c_kmax->add_option("--file", file);

    auto* c_primroot = app.add_subcommand("primroot", "unique primitive root of a rank-2 set");
    c_primroot->add_option("words", words_arg);
    c_primroot->add_option("--file", file);

    auto* c_inter = app.add_subcommand("intersect", "intersection of two pair-generated monoids");
    c_inter->add_option("--left", left, "pair, e.g. abcab,cb")->required();
    c_inter->add_option("--right", right, "pair, e.g. abc,bcb")->required();

    auto* c_cube = app.add_subcommand("cube", "internal occurrences of xy/yx in {x,y}^3");
    c_cube->add_option("words", words_arg)->expected(2);

    auto* c_binroot = app.add_subcommand("binroot", "binary roots of a primitive word");
    c_binroot->add_option("word", words_arg)->required();
    c_binroot->add_flag("--all", only_all, "list all binary roots (default)");
    c_binroot->add_flag("--small", only_small, "only the unique root below sqrt(|w|)");

    auto* c_theta = app.add_subcommand("theta", "theta-root, theta-primitivity, bridge checks");
    c_theta->add_option("word", words_arg)->required();
    c_theta->add_option("--theta", theta_spec, "letter involution, e.g. a:b,b:a,c:c");
    c_theta->add_option("--kind", theta_kind, "morphic | antimorphic")
        ->check(CLI::IsMember({"morphic", "antimorphic"}));

    auto* c_sweep = app.add_subcommand("sweep", "intersection-length sweep, CSV output");
    c_sweep->add_option("--alphabet", cfg.alphabet_size, "alphabet size (2 or 3)");
    c_sweep->add_option("--max-len", cfg.max_gen_len, "max generator length");
    c_sweep->add_option("--max-pair-size", cfg.max_pair_size, "max |x|+|y|");
    c_sweep->add_option("--out", csv_out, "CSV file (default stdout)");

    auto* c_verify = app.add_subcommand("verify", "exhaustive theorem verification");
    c_verify->add_option("--alphabet", cfg.alphabet_size);
    c_verify->add_option("--max-len", cfg.max_gen_len, "max generator/word length for pair sweeps");
    c_verify->add_option("--max-word-len", cfg.max_word_len, "max word length for T6/theta");
    c_verify->add_flag("--t2", vt2);
    c_verify->add_flag("--t4", vt4);
    c_verify->add_flag("--t5", vt5);
    c_verify->add_flag("--t6", vt6);
    c_verify->add_flag("--theta", vtheta);

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
    }
    cfg.workers = workers;
    const SweepExecution exec = serial ? SweepExecution::Serial : SweepExecution::Parallel;

    try {
        if (c_word->parsed()) {
            const Word& w = words_arg[0];
            auto [root, exp] = primitive_word_root(w);
            json j{{"word", w}, {"primitive", exp == 1}, {"root", root}, {"exponent", exp}};
            emit(j, as_json,
                 w + (exp == 1 ? " is primitive\n"
                               : " = (" + root + ")^" + std::to_string(exp) + "\n"));
        } else if (c_code->parsed()) {
            WordSet X = parse_set(words_arg, file);
            CodeResult cr = is_code(X);
            json j{{"set", to_json(X)},
                   {"code", cr.code},
                   {"prefix_code", is_prefix_code(X)},
                   {"suffix_code", is_suffix_code(X)},
                   {"bifix_code", is_bifix_code(X)}};
            std::string text = X.to_csv() + (cr.code ? ": code\n" : ": not a code\n");
            if (cr.witness) {
                j["witness"] = {{"word", cr.witness->word},
                                {"first", cr.witness->first},
                                {"second", cr.witness->second}};
                text += "  witness: " + cr.witness->word + "\n";
            }
            emit(j, as_json, text);
        } else if (c_hull->parsed()) {
            WordSet X = parse_set(words_arg, file);
            HullResult h = free_hull(X);
            json trace = json::array();
            for (auto& [from, to] : h.reduction_trace) trace.push_back({{"replaced", from}, {"replacement", to}});
            json j{{"basis", to_json(h.basis)}, {"free_rank", h.free_rank}, {"trace", trace}};
            emit(j, as_json,
                 "basis {" + h.basis.to_csv() + "}, free rank " + std::to_string(h.free_rank) + "\n");
        } else if (c_rank->parsed()) {
            WordSet X = parse_set(words_arg, file);
            RankResult r = combinatorial_rank(
                X, rank_mode == "le2" ? RankMode::DecideLe2 : RankMode::ExactSmall);
            json j{{"rank", r.rank}, {"witness", to_json(r.witness)}};
            emit(j, as_json,
                 "rank " + std::to_string(r.rank) + ", witness {" + r.witness.to_csv() + "}\n");
        } else if (c_graph->parsed()) {
            WordSet X = parse_set(words_arg, file);
            DependencyGraph g = dependency_graph(X);
            json edges = json::array();
            std::string text = "edges:";
            for (auto [i, j2] : g.edges) {
                edges.push_back({X[i], X[j2]});
                text += " (" + X[i] + "," + X[j2] + ")";
            }
            text += "\ncomponents: " + std::to_string(g.components) + "\n";
            emit(json{{"edges", edges}, {"components", g.components}}, as_json, text);
        } else if (c_pair->parsed()) {
            PrimitivePairReport rep = is_primitive_pair(words_arg[0], words_arg[1]);
            json j{{"pair", to_json(rep.pair)}, {"primitive", rep.primitive}};
            std::string text = "{" + rep.pair.to_csv() + "}: " +
                               (rep.primitive ? "primitive pair\n" : "not primitive\n");
            if (rep.counterexample) {
                j["counterexample"] = to_json(*rep.counterexample);
                text += "  contained in {" + rep.counterexample->to_csv() + "}*\n";
            }
            emit(j, as_json, text);
        } else if (c_kmax->parsed()) {
            WordSet X = parse_set(words_arg, file);
            KMaximalityReport rep = is_k_maximal(X, X.size());
            json j{{"set", to_json(X)}, {"k", X.size()}, {"maximal", rep.maximal}};
            std::string text = "{" + X.to_csv() + "}*: " + std::to_string(X.size()) +
                               (rep.maximal ? "-maximal\n" : "-maximal: no\n");
            if (rep.witness) {
                j["witness"] = to_json(*rep.witness);
                text += "  contained in {" + rep.witness->to_csv() + "}*\n";
            }
            emit(j, as_json, text);
        } else if (c_primroot->parsed()) {
            WordSet X = parse_set(words_arg, file);
            try {
                WordSet root = primitive_root_rank2(X);
                emit(json{{"root", to_json(root)}}, as_json, "{" + root.to_csv() + "}\n");
            } catch (const IsRankOneError& e) {
                emit(json{{"error", "rank 1"}, {"root", e.root}}, as_json,
                     "rank 1; classical root " + e.root + "\n");
                return 2;
            }
        } else if (c_inter->parsed()) {
            IntersectionReport rep =
                intersect_primitive_pairs(WordSet::from_csv(left), WordSet::from_csv(right));
            json j{{"left", to_json(rep.left)}, {"right", to_json(rep.right)}};
            std::string text;
            switch (rep.kind) {
                case IntersectionKind::TrivialEpsilon:
                    j["kind"] = "trivial";
                    text = "intersection is {epsilon}\n";
                    break;
                case IntersectionKind::SingleGenerator:
                    j["kind"] = "single";
                    j["z"] = *rep.z;
                    j["z_primitive"] = *rep.z_primitive;
                    j["bound_ok"] = *rep.bound_ok;
                    text = "z = " + *rep.z + "\n";
                    break;
                case IntersectionKind::Other:
                    j["kind"] = "other";
                    text = rep.generators.kind == GeneratorResult::Kind::Finite
                               ? "generated by {" + rep.generators.generators.to_csv() + "}\n"
                               : "infinitely generated: " + rep.generators.pump->to_string() + "\n";
                    break;
            }
            j["generators"] = to_json(rep.generators);
            emit(j, as_json, text);
        } else if (c_cube->parsed()) {
            CubeReport rep = cube_occurrence_check(words_arg[0], words_arg[1]);
            json j{{"clean", rep.clean}};
            std::string text = rep.clean ? "clean\n" : "";
            if (rep.occurrence) {
                const auto& o = *rep.occurrence;
                j["occurrence"] = {{"triple", o.host_triple},
                                   {"pattern", o.pattern},
                                   {"offset", o.offset}};
                text = o.pattern + " occurs internally in " + o.host_triple[0] + "." +
                       o.host_triple[1] + "." + o.host_triple[2] + " at offset " +
                       std::to_string(o.offset) + "\n";
            }
            emit(j, as_json, text);
        } else if (c_binroot->parsed()) {
            const Word& w = words_arg[0];
            if (only_small) {
                auto root = small_binary_root(w);
                json j{{"word", w}};
                if (root) j["small_root"] = to_json(*root);
                emit(j, as_json, root ? "{" + root->to_csv() + "}\n" : "no small binary root\n");
            } else {
                BinaryRootReport rep = binary_roots(w);
                json roots = json::array();
                std::string text;
                for (const BinaryRoot& r : rep.roots) {
                    roots.push_back({{"pair", to_json(r.pair)}, {"size", r.size}});
                    text += "{" + r.pair.to_csv() + "} size " + std::to_string(r.size) + "\n";
                }
                json j{{"word", w}, {"roots", roots}};
                if (rep.small_root) j["small_root"] = to_json(*rep.small_root);
                emit(j, as_json, text);
            }
        } else if (c_theta->parsed()) {
            const Word& w = words_arg[0];
            Involution theta = parse_involution(Alphabet::from_words({w}), theta_spec, theta_kind);
            Word image = theta.apply(w);
            Word root = theta_root(w, theta);
            json j{{"word", w},
                   {"theta_image", image},
                   {"theta_root", root},
                   {"theta_primitive", root == w}};
            std::string text = "theta(w) = " + image + "\ntheta-root = " + root + "\n";
            if (image != w) {
                BridgeReport rep = check_bridge_props(w, theta);
                j["pair_primitive"] = rep.pair_primitive;
                if (rep.pair_root) j["pair_root"] = to_json(*rep.pair_root);
                if (rep.palindrome_pair) j["palindrome_pair"] = to_json(*rep.palindrome_pair);
                if (rep.kms_clean) j["kms_clean"] = *rep.kms_clean;
                if (rep.pair_root) text += "pair root = {" + rep.pair_root->to_csv() + "}\n";
            }
            emit(j, as_json, text);
        } else if (c_sweep->parsed()) {
            std::ofstream out_file;
            std::ostream* out = &std::cout;
            if (!csv_out.empty()) {
                out_file.open(csv_out);
                out = &out_file;
            }
            SweepSummary sum = run_intersection_sweep(cfg, *out, exec);
            json j{{"primitive_pairs", sum.primitive_pairs},
                   {"pair_combinations", sum.pair_combinations},
                   {"records", sum.records},
                   {"max_ratio", sum.max_ratio},
                   {"violations", sum.violations}};
            if (sum.records) {
                j["argmax"] = {{"x", sum.argmax.x}, {"y", sum.argmax.y}, {"u", sum.argmax.u},
                               {"v", sum.argmax.v}, {"z_len", sum.argmax.z_len}};
            }
            std::ostream& info = csv_out.empty() ? std::cerr : std::cout;
            if (as_json) {
                info << j.dump(2) << "\n";
            } else {
                info << "pairs: " << sum.primitive_pairs << ", records: " << sum.records
                     << ", max ratio: " << sum.max_ratio << "\n";
                for (const auto& v : sum.violations) info << "VIOLATION: " << v << "\n";
            }
            if (!sum.violations.empty()) return 1;
        } else if (c_verify->parsed()) {
            std::set<Theorem> which;
            if (vt2) which.insert(Theorem::T2);
            if (vt4) which.insert(Theorem::T4);
            if (vt5) which.insert(Theorem::T5);
            if (vt6) which.insert(Theorem::T6);
            if (vtheta) which.insert(Theorem::Theta);
            if (which.empty())
                which = {Theorem::T2, Theorem::T4, Theorem::T5, Theorem::T6, Theorem::Theta};
            VerifyReport rep = verify_theorems(cfg, which, exec);
            json items = json::array();
            for (const VerifyItem& it : rep.items) {
                items.push_back({{"name", it.name},
                                 {"checked", it.checked},
                                 {"pass", it.pass},
                                 {"counterexamples", it.counterexamples}});
                if (!as_json) {
                    std::cout << (it.pass ? "PASS" : "FAIL") << "  " << it.name << "  ("
                              << it.checked << " instances)\n";
                    for (const auto& c : it.counterexamples) std::cout << "   " << c << "\n";
                }
            }
            if (as_json) std::cout << json{{"items", items}, {"pass", rep.all_pass()}}.dump(2) << "\n";
            if (!rep.all_pass()) return 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
