#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "schroeder/bijections.hpp"
#include "schroeder/counting.hpp"
#include "schroeder/enumerate.hpp"
#include "schroeder/sampling.hpp"
#include "schroeder/text.hpp"

namespace {

using namespace schroeder;

// Exit codes: 0 success / verification passed, 1 verification failed or
// precondition violated, 2 usage or parse error, 3 internal invariant
// violation.
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

int cmd_count(const std::string& kind, int n) {
    if (kind == "schroeder") {
        if (n == 1) {
            std::cout << "1\t1\n";
            return kOk;
        }
        CountTable s = schroeder_numbers_rec(n);
        for (int i = 1; i <= n; ++i) std::cout << i << '\t' << s.at(i).get_str() << '\n';
        return kOk;
    }
    if (kind == "catalan") {
        CountTable c = catalan_rec(n);
        for (int i = 1; i <= n; ++i) std::cout << i << '\t' << c.at(i).get_str() << '\n';
        return kOk;
    }
    // pointed: pt / lt / it columns from the DP oracle
    CountTable s = schroeder_numbers_dp(n);
    for (int i = 1; i <= n; ++i) {
        const BigInt& v = s.at(i);
        std::cout << i << '\t' << BigInt((2 * i - 1) * v).get_str() << '\t'
                  << BigInt(i * v).get_str() << '\t' << BigInt((i - 1) * v).get_str() << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int verify_recurrence_one(int n_max) {
    CountTable dp = schroeder_numbers_dp(n_max + 1);
    CountTable rec = schroeder_numbers_rec(n_max + 1);
    bool all_ok = true;
    for (int n = 2; n <= n_max; ++n) {
        BigInt lhs = 3 * (2 * n - 1) * dp.at(n);
        BigInt rhs = (n + 1) * dp.at(n + 1) + (n - 2) * dp.at(n - 1);
        bool ok = lhs == rhs && dp.at(n) == rec.at(n) && dp.at(n + 1) == rec.at(n + 1);
        if (ok) {
            std::cout << "n=" << n << " ok\n";
        } else {
            all_ok = false;
            std::cout << "n=" << n << " FAIL lhs=" << lhs.get_str() << " rhs=" << rhs.get_str()
                      << " dp=" << dp.at(n).get_str() << " rec=" << rec.at(n).get_str() << '\n';
            break;
        }
    }
    return all_ok ? kOk : kVerifyFailed;
}

int verify_recurrence_two(int n_max) {
    CountTable rec = catalan_rec(n_max + 1);
    bool all_ok = true;
    for (int n = 1; n <= n_max; ++n) {
        BigInt cn = catalan_closed_form(n);
        BigInt cn1 = catalan_closed_form(n + 1);
        BigInt lhs = 2 * (2 * n - 1) * cn;
        BigInt rhs = (n + 1) * cn1;
        bool ok = lhs == rhs && cn == rec.at(n) && cn1 == rec.at(n + 1);
        if (ok) {
            std::cout << "n=" << n << " ok\n";
        } else {
            all_ok = false;
            std::cout << "n=" << n << " FAIL lhs=" << lhs.get_str() << " rhs=" << rhs.get_str()
                      << '\n';
            break;
        }
    }
    return all_ok ? kOk : kVerifyFailed;
}

int verify_sigma(int n_max) {
    bool all_ok = true;
    for (int n = 2; n <= n_max; ++n) {
        SigmaCheckReport r = check_sigma_bijection(n);
        std::cout << "n=" << n << " pairs=" << r.pairs << " lt=" << r.leaf_images
                  << " it=" << r.interior_images;
        if (!r.ok()) {
            all_ok = false;
            std::cout << " FAIL injective=" << r.injective << " lt_cover=" << r.covers_leaf_pointed
                      << " it_cover=" << r.covers_interior_pointed
                      << " fwd=" << r.forward_roundtrip << " bwd=" << r.backward_roundtrip;
            if (!r.first_counterexample.empty())
                std::cout << " counterexample: " << r.first_counterexample;
        }
        std::cout << '\n';
    }
    return all_ok ? kOk : kVerifyFailed;
}

int verify_phi(int n_max) {
    bool all_ok = true;
    for (int n = 1; n <= n_max; ++n) {
        PhiCheckReport r = check_phi_bijection(n);
        std::cout << "n=" << n << " trees=" << r.trees;
        if (r.ok()) {
            std::cout << " ok";
        } else {
            all_ok = false;
            std::cout << " FAIL leaves=" << r.leaf_counts_preserved
                      << " wellweighted=" << r.images_well_weighted
                      << " fwd=" << r.forward_roundtrip << " bwd=" << r.backward_roundtrip
                      << " image=" << r.image_matches_enumeration;
            if (!r.first_counterexample.empty())
                std::cout << " counterexample: " << r.first_counterexample;
        }
        std::cout << '\n';
    }
    return all_ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// map
// ---------------------------------------------------------------------------

std::string rstrip(const std::string& line) {
    std::size_t end = line.size();
    while (end > 0 && (line[end - 1] == ' ' || line[end - 1] == '\r' || line[end - 1] == '\t'))
        --end;
    return line.substr(0, end);
}

int cmd_map(const std::string& which, const std::string& label_text) {
    std::optional<Label> label;
    if (which == "sigma") {
        label = label_from(label_text);
        if (!label) {
            std::cerr << "map --which sigma requires --label L1|L2|R1\n";
            return kUsage;
        }
    } else if (!label_text.empty()) {
        std::cerr << "--label is only meaningful with --which sigma\n";
        return kUsage;
    }

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(std::cin, line)) {
        ++line_no;
        std::string text = rstrip(line);
        if (text.empty()) continue;
        try {
            if (which == "phi") {
                std::cout << serialize(phi(parse_schroeder(text))) << '\n';
            } else if (which == "phi-inv") {
                std::cout << serialize(phi_inverse(parse_weighted(text))) << '\n';
            } else if (which == "sigma") {
                MarkedWeightedTree m = parse_weighted_pointed(text);
                SigmaImage img = sigma(*label, PointedTree(m.tree, m.mark));
                std::cout << (img.kind() == ImageKind::LeafPointed ? "LT: " : "IT: ")
                          << serialize(img.pointed()) << '\n';
            } else {  // sigma-inv
                std::optional<ImageKind> declared;
                std::string_view body = text;
                if (body.rfind("LT:", 0) == 0) {
                    declared = ImageKind::LeafPointed;
                    body.remove_prefix(3);
                } else if (body.rfind("IT:", 0) == 0) {
                    declared = ImageKind::InteriorPointed;
                    body.remove_prefix(3);
                }
                MarkedWeightedTree m = parse_weighted_pointed(body);
                PointedTree p(m.tree, m.mark);
                ImageKind kind =
                    p.points_to_leaf() ? ImageKind::LeafPointed : ImageKind::InteriorPointed;
                if (declared && *declared != kind)
                    throw SyntaxError(0, std::string(declared == ImageKind::LeafPointed
                                                         ? "a pointed leaf after LT:"
                                                         : "a pointed interior node after IT:"));
                auto [lab, preimage] = sigma_inverse(SigmaImage(kind, std::move(p)));
                std::cout << label_name(lab) << ' ' << serialize(preimage) << '\n';
            }
        } catch (const SyntaxError& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            return kUsage;
        } catch (const ArityError& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            return kUsage;
        } catch (const PointError& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            return kUsage;
        } catch (const TooSmall& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            return kVerifyFailed;
        } catch (const NotWellWeighted& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            return kVerifyFailed;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

void emit(const std::string& tree, int n, const std::string& format) {
    if (format == "jsonl") {
        // the serialized charset never needs JSON escaping
        std::cout << "{\"n\":" << n << ",\"tree\":\"" << tree << "\"}\n";
    } else {
        std::cout << tree << '\n';
    }
}

int cmd_enumerate(const std::string& kind, int n, const std::string& format) {
    if (kind == "schroeder") {
        SchroederStream s(n);
        while (auto t = s.next()) emit(serialize(*t), n, format);
    } else if (kind == "binary") {
        BinaryStream s(n);
        while (auto t = s.next()) emit(serialize(*t), n, format);
    } else if (kind == "wellweighted") {
        WellWeightedStream s(n);
        while (auto t = s.next()) emit(serialize(*t), n, format);
    } else {
        NodeFilter mode = kind == "pointed-leaf"
                              ? NodeFilter::LeavesOnly
                              : kind == "pointed-interior" ? NodeFilter::InteriorOnly
                                                           : NodeFilter::All;
        PointedStream s(n, mode);
        while (auto t = s.next()) emit(serialize(*t), n, format);
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

int cmd_sample(const std::string& kind, int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::int64_t max_steps = SamplerConfig{n, seed, 0}.effective_max_steps();
    for (int i = 0; i < count; ++i) {
        if (kind == "catalan" || kind == "binary") {
            std::cout << serialize(sample_binary_uniform(n, rng)) << '\n';
        } else if (kind == "wellweighted") {
            std::cout << serialize(sample_well_weighted_uniform(n, rng, max_steps)) << '\n';
        } else {
            std::cout << serialize(sample_schroeder_uniform(n, rng, max_steps)) << '\n';
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// render
// ---------------------------------------------------------------------------

struct RenderNode {
    std::string token;  // weight digit, "*" for leaves, "." for unweighted interior
    bool pointed = false;
    std::vector<RenderNode> children;
};

RenderNode render_node(const SchroederTree& t) {
    RenderNode n;
    if (t.is_leaf()) {
        n.token = "*";
        return n;
    }
    n.token = ".";
    for (const auto& c : t.children()) n.children.push_back(render_node(c));
    return n;
}

RenderNode render_node(const BinaryTree& t) {
    RenderNode n;
    if (t.is_leaf()) {
        n.token = "*";
        return n;
    }
    n.token = ".";
    n.children.push_back(render_node(t.left()));
    n.children.push_back(render_node(t.right()));
    return n;
}

RenderNode render_node(const WeightedTree& t, const std::vector<Step>* path, std::size_t depth) {
    RenderNode n;
    n.pointed = path && depth == path->size();
    if (t.is_leaf()) {
        n.token = "*";
        return n;
    }
    n.token = t.weight() == Weight::One ? "1" : "2";
    const std::vector<Step>* go_left = nullptr;
    const std::vector<Step>* go_right = nullptr;
    if (path && depth < path->size()) ((*path)[depth] == Step::Left ? go_left : go_right) = path;
    n.children.push_back(render_node(t.left(), go_left, depth + 1));
    n.children.push_back(render_node(t.right(), go_right, depth + 1));
    return n;
}

RenderNode parse_for_render(const std::string& text) {
    if (!text.empty() && text.front() == '{') return render_node(parse_schroeder(text));
    try {
        return render_node(parse_weighted(text), nullptr, 0);
    } catch (const SyntaxError&) {
    }
    try {
        MarkedWeightedTree m = parse_weighted_pointed(text);
        return render_node(m.tree, &m.mark.steps(), 0);
    } catch (const SyntaxError&) {
    } catch (const PointError&) {
    }
    return render_node(parse_binary(text));
}

void write_dot(const RenderNode& node, int& next_id, std::ostream& out) {
    struct Frame {
        const RenderNode* node;
        int id;
    };
    // vertices in preorder, then edges
    std::vector<Frame> order;
    std::vector<std::pair<int, int>> edges;
    std::vector<Frame> stack{{&node, next_id++}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        order.push_back(f);
        std::vector<Frame> kids;
        for (const auto& c : f.node->children) kids.push_back({&c, next_id++});
        for (const auto& k : kids) edges.emplace_back(f.id, k.id);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    out << "digraph tree {\n";
    for (const auto& f : order) {
        out << "  n" << f.id << " [label=\"" << f.node->token << (f.node->pointed ? "'" : "")
            << "\"";
        if (f.node->pointed) out << ", peripheries=2";
        out << "];\n";
    }
    for (const auto& [a, b] : edges) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
}

void write_ascii(const RenderNode& node, int depth, std::ostream& out) {
    for (int i = 0; i < depth; ++i) out << "  ";
    out << node.token << (node.pointed ? "'" : "") << '\n';
    for (const auto& c : node.children) write_ascii(c, depth + 1, out);
}

int cmd_render(const std::string& format) {
    std::string line;
    std::size_t line_no = 0;
    int next_id = 0;
    while (std::getline(std::cin, line)) {
        ++line_no;
        std::string text = rstrip(line);
        if (text.empty()) continue;
        try {
            RenderNode root = parse_for_render(text);
            if (format == "dot")
                write_dot(root, next_id, std::cout);
            else
                write_ascii(root, 0, std::cout);
        } catch (const Error& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            return kUsage;
        }
    }
    return kOk;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SCHRODER_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring non-numeric SCHRODER_SEED\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schroeder / Catalan tree toolkit: exact counting, exhaustive "
                 "enumeration, the phi and sigma bijections, and uniform samplers"};
    app.require_subcommand(1);

    std::string kind, which, label, format;
    int n = 1, n_max = 1, count = 1;
    std::uint64_t seed = default_seed();
    std::string recurrence;

    auto* count_cmd = app.add_subcommand("count", "print sequence values 1..n");
    count_cmd->add_option("--kind", kind, "schroeder | catalan | pointed")
        ->required()
        ->check(CLI::IsMember({"schroeder", "catalan", "pointed"}));
    count_cmd->add_option("--n", n, "largest index")->required()->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--recurrence", recurrence, "1 | 2 | sigma | phi")
        ->required()
        ->check(CLI::IsMember({"1", "2", "sigma", "phi"}));
    verify_cmd->add_option("--n-max", n_max, "largest n checked")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* map_cmd = app.add_subcommand("map", "apply a bijection to stdin lines");
    map_cmd->add_option("--which", which, "phi | phi-inv | sigma | sigma-inv")
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inv", "sigma", "sigma-inv"}));
    map_cmd->add_option("--label", label, "L1 | L2 | R1 (sigma only)");

    auto* enum_cmd = app.add_subcommand("enumerate", "list all trees with n leaves");
    enum_cmd->add_option("--kind", kind, "schroeder | binary | wellweighted | pointed | "
                                         "pointed-leaf | pointed-interior")
        ->required()
        ->check(CLI::IsMember({"schroeder", "binary", "wellweighted", "pointed", "pointed-leaf",
                               "pointed-interior"}));
    enum_cmd->add_option("--n", n, "leaf count")->required()->check(CLI::PositiveNumber);
    enum_cmd->add_option("--format", format, "sexpr | jsonl")
        ->default_val("sexpr")
        ->check(CLI::IsMember({"sexpr", "jsonl"}));

    auto* sample_cmd = app.add_subcommand("sample", "draw uniform random trees");
    sample_cmd->add_option("--kind", kind, "catalan | binary | wellweighted | schroeder")
        ->required()
        ->check(CLI::IsMember({"catalan", "binary", "wellweighted", "schroeder"}));
    sample_cmd->add_option("--n", n, "leaf count")->required()->check(CLI::PositiveNumber);
    sample_cmd->add_option("--count", count, "number of samples")
        ->default_val(1)
        ->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", seed, "PRNG seed (default: $SCHRODER_SEED or 0)");

    auto* render_cmd = app.add_subcommand("render", "render stdin trees as dot or ascii");
    render_cmd->add_option("--format", format, "dot | ascii")
        ->default_val("dot")
        ->check(CLI::IsMember({"dot", "ascii"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (count_cmd->parsed()) return cmd_count(kind, n);
        if (verify_cmd->parsed()) {
            if (recurrence == "1") return verify_recurrence_one(n_max);
            if (recurrence == "2") return verify_recurrence_two(n_max);
            if (recurrence == "sigma") return verify_sigma(n_max);
            return verify_phi(n_max);
        }
        if (map_cmd->parsed()) return cmd_map(which, label);
        if (enum_cmd->parsed()) return cmd_enumerate(kind, n, format);
        if (sample_cmd->parsed()) return cmd_sample(kind, n, count, seed);
        if (render_cmd->parsed()) return cmd_render(format);
    } catch (const TooSmall& e) {
        std::cerr << e.what() << '\n';
        return kVerifyFailed;
    } catch (const NotWellWeighted& e) {
        std::cerr << e.what() << '\n';
        return kVerifyFailed;
    } catch (const SyntaxError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const ArityError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const PointError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
