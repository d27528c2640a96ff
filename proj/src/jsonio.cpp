#include "fl/jsonio.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fl {

using nlohmann::json;

std::string algebra_to_json(const Algebra &A) {
    json j;
    j["n"] = A.L.n;
    std::vector<int> leq;
    for (int a = 0; a < A.L.n; a++)
        for (int b = 0; b < A.L.n; b++) leq.push_back(A.L.leq(a, b) ? 1 : 0);
    j["leq"] = leq;
    if (!A.neg.table.empty()) j["neg"] = A.neg.table;
    if (A.imp) j["imp"] = A.imp->table;
    return j.dump(2);
}

Algebra algebra_from_json(const std::string &text) {
    json j = json::parse(text);
    int n = j.at("n").get<int>();
    if (n < 1 || n > 64) throw std::runtime_error("algebra size out of range");
    auto bits = j.at("leq").get<std::vector<int>>();
    if (static_cast<int>(bits.size()) != n * n) throw std::runtime_error("leq has wrong length");
    std::vector<uint64_t> rows(n, 0);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            if (bits[a * n + b]) rows[a] |= 1ULL << b;
    auto L = BoundedLattice::from_leq(n, rows);
    if (!L) throw std::runtime_error("leq table is not a bounded lattice");
    Algebra A;
    A.L = *L;
    if (j.contains("neg")) {
        A.neg.table = j.at("neg").get<std::vector<uint8_t>>();
        if (static_cast<int>(A.neg.table.size()) != n)
            throw std::runtime_error("neg has wrong length");
        for (auto v : A.neg.table)
            if (v >= n) throw std::runtime_error("neg entry out of range");
    } else {
        A.neg = trivial_weak_pc(A.L);
    }
    if (j.contains("imp")) {
        ImplicationOp imp;
        imp.n = n;
        imp.table = j.at("imp").get<std::vector<uint8_t>>();
        if (static_cast<int>(imp.table.size()) != n * n)
            throw std::runtime_error("imp has wrong length");
        for (auto v : imp.table)
            if (v >= n) throw std::runtime_error("imp entry out of range");
        A.imp = imp;
    }
    return A;
}

std::string frame_to_json(const Frame &F) {
    json j;
    j["size"] = F.size;
    std::vector<int> rel;
    for (int x = 0; x < F.size; x++)
        for (int y = 0; y < F.size; y++) rel.push_back(F.open_to(x, y) ? 1 : 0);
    j["rel"] = rel;
    if (!F.labels.empty()) j["labels"] = F.labels;
    return j.dump(2);
}

static Frame frame_from_jobj(const json &j) {
    int n = j.at("size").get<int>();
    if (n < 1 || n > 63) throw std::runtime_error("frame size out of range");
    auto bits = j.at("rel").get<std::vector<int>>();
    if (static_cast<int>(bits.size()) != n * n) throw std::runtime_error("rel has wrong length");
    Frame F;
    F.size = n;
    F.rel.assign(n, 0);
    for (int x = 0; x < n; x++)
        for (int y = 0; y < n; y++)
            if (bits[x * n + y]) F.rel[x] |= 1ULL << y;
    if (j.contains("labels")) F.labels = j.at("labels").get<std::vector<std::string>>();
    F.finish();
    return F;
}

Frame frame_from_json(const std::string &text) { return frame_from_jobj(json::parse(text)); }

static std::vector<int> prop_to_states(Prop p, int n) {
    std::vector<int> out;
    for (int x = 0; x < n; x++)
        if ((p >> x) & 1) out.push_back(x);
    return out;
}

std::string model_to_json(const RelationalModel &M) {
    json j = json::parse(frame_to_json(M.frame));
    json val = json::object();
    for (auto &[name, p] : M.valuation) val[name] = prop_to_states(p, M.frame.size);
    j["valuation"] = val;
    if (M.domain_size > 0) {
        j["domain"] = M.domain_size;
        json preds = json::object();
        for (auto &[key, p] : M.pred_valuation) {
            std::string tuple;
            for (size_t i = 0; i < key.second.size(); i++) {
                if (i) tuple += ',';
                tuple += std::to_string(key.second[i]);
            }
            preds[key.first][tuple] = prop_to_states(p, M.frame.size);
        }
        j["predicates"] = preds;
    }
    return j.dump(2);
}

RelationalModel model_from_json(const std::string &text) {
    json j = json::parse(text);
    RelationalModel M;
    M.frame = frame_from_jobj(j);
    if (j.contains("valuation")) {
        for (auto &[name, states] : j.at("valuation").items()) {
            Prop p = 0;
            for (int s : states.get<std::vector<int>>()) {
                if (s < 0 || s >= M.frame.size) throw std::runtime_error("state out of range");
                p |= 1ULL << s;
            }
            if (!is_fixpoint(M.frame, p))
                throw std::runtime_error("valuation of '" + name + "' is not a fixpoint");
            M.valuation[name] = p;
        }
    }
    if (j.contains("domain")) {
        M.domain_size = j.at("domain").get<int>();
        if (j.contains("predicates")) {
            for (auto &[pname, tuples] : j.at("predicates").items()) {
                for (auto &[tuple, states] : tuples.items()) {
                    std::vector<int> tup;
                    std::istringstream ss(tuple);
                    std::string part;
                    while (std::getline(ss, part, ',')) tup.push_back(std::stoi(part));
                    Prop p = 0;
                    for (int s : states.get<std::vector<int>>()) p |= 1ULL << s;
                    if (!is_fixpoint(M.frame, p))
                        throw std::runtime_error("predicate valuation is not a fixpoint");
                    M.pred_valuation[{pname, tup}] = p;
                }
            }
        }
    }
    return M;
}

}  // namespace fl
