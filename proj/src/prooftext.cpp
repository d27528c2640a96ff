#include "fl/prooftext.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fl {

namespace {

struct RawLine {
    int depth;
    Formula formula;
    Rule rule;
    std::vector<int> cited_lines;  // global line numbers
    int number;                    // 1-based global number
};

}  // namespace

ProofNode parse_proof_text(const std::string &text, const Profile &profile) {
    std::vector<RawLine> raw;
    std::istringstream in(text);
    std::string line;
    int indent_unit = -1;
    int number = 0;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line.find('\t') < first)
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": tabs not allowed in indentation");
        int spaces = static_cast<int>(first);
        int depth = 0;
        if (spaces > 0) {
            if (indent_unit < 0) indent_unit = spaces;
            if (spaces % indent_unit != 0)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": inconsistent indentation");
            depth = spaces / indent_unit;
        }
        size_t semi = line.find(';');
        if (semi == std::string::npos)
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected '<formula> ; <rule> [cites]'");
        Formula f;
        try {
            f = parse(line.substr(first, semi - first), profile);
        } catch (const ParseError &e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        std::istringstream rest(line.substr(semi + 1));
        std::string rulename;
        rest >> rulename;
        auto rule = rule_from_string(rulename);
        if (!rule)
            throw std::runtime_error("line " + std::to_string(lineno) + ": unknown rule '" +
                                     rulename + "'");
        std::vector<int> cites;
        int c;
        while (rest >> c) cites.push_back(c);
        raw.push_back({depth, f, *rule, cites, ++number});
    }
    if (raw.empty()) throw std::runtime_error("empty proof");
    if (raw[0].depth != 0) throw std::runtime_error("first line must not be indented");

    // where each global line lives: as a plain entry, and (if it opens a block)
    // which entry of the parent that block is
    struct Loc {
        const void *node = nullptr;
        int entry = -1;
    };
    std::vector<Loc> line_entry(raw.size() + 1);
    std::vector<Loc> line_block(raw.size() + 1);

    std::function<std::shared_ptr<ProofNode>(size_t &, int)> build =
        [&](size_t &i, int depth) -> std::shared_ptr<ProofNode> {
        auto node = std::make_shared<ProofNode>();
        while (i < raw.size() && raw[i].depth >= depth) {
            if (raw[i].depth == depth) {
                // a hypothesis at the same depth opens a sibling block
                if (!node->entries.empty() && raw[i].rule == Rule::Hyp) break;
                line_entry[raw[i].number] = {node.get(), static_cast<int>(node->entries.size())};
                node->entries.push_back(ProofNode::line(raw[i].formula, {raw[i].rule, {}}));
                i++;
            } else if (raw[i].depth == depth + 1) {
                int opener = raw[i].number;
                auto sub = build(i, depth + 1);
                line_block[opener] = {node.get(), static_cast<int>(node->entries.size())};
                node->entries.push_back(ProofNode::Entry{false, {}, {}, sub});
            } else {
                throw std::runtime_error("line " + std::to_string(raw[i].number) +
                                         ": indentation jumps more than one level");
            }
        }
        return node;
    };
    size_t i = 0;
    auto root = build(i, 0);
    if (i != raw.size()) throw std::runtime_error("inconsistent indentation structure");

    // attach citation indices; raw lines are visited in document order
    std::function<void(ProofNode &, size_t &)> fix = [&](ProofNode &node, size_t &j) {
        for (auto &e : node.entries) {
            if (!e.is_line) {
                fix(*e.sub, j);
                continue;
            }
            const RawLine &rl = raw[j];
            for (int gl : rl.cited_lines) {
                if (gl < 1 || gl > static_cast<int>(raw.size()))
                    throw std::runtime_error("line " + std::to_string(rl.number) +
                                             ": citation out of range");
                if (rl.rule == Rule::Reit) {
                    // a reiteration names a line of an enclosing proof; the
                    // checker verifies membership in the reiterables instead
                    if (raw[gl - 1].formula != rl.formula)
                        throw std::runtime_error("line " + std::to_string(rl.number) +
                                                 ": reiterated formula differs from line " +
                                                 std::to_string(gl));
                    continue;
                }
                if (line_entry[gl].node == &node)
                    e.just.cites.push_back(line_entry[gl].entry);
                else if (line_block[gl].node == &node)
                    e.just.cites.push_back(line_block[gl].entry);
                else
                    throw std::runtime_error("line " + std::to_string(rl.number) +
                                             ": cited line " + std::to_string(gl) +
                                             " is not visible from this proof block");
            }
            j++;
        }
    };
    size_t j = 0;
    fix(*root, j);
    return *root;
}

std::string print_proof_text(const ProofNode &p) {
    std::string out;
    std::function<void(const ProofNode &, int, int &)> go = [&](const ProofNode &node, int depth,
                                                                int &number) {
        std::vector<int> entry_line(node.entries.size(), 0);
        for (size_t i = 0; i < node.entries.size(); i++) {
            const auto &e = node.entries[i];
            if (e.is_line) {
                entry_line[i] = ++number;
                out += std::string(depth * 2, ' ');
                out += print(e.formula);
                out += " ; ";
                out += to_string(e.just.rule);
                for (int c : e.just.cites) {
                    out += ' ';
                    out += std::to_string(entry_line[c]);
                }
                out += '\n';
            } else {
                entry_line[i] = number + 1;  // a block is cited by its first line
                go(*e.sub, depth + 1, number);
            }
        }
    };
    int number = 0;
    go(p, 0, number);
    return out;
}

}  // namespace fl
