#include "report.hpp"

#include <sstream>

namespace chipfire::cli {

Json betti_json(const Multigraph& g, const BettiReport& r) {
    Json out;
    out["window"] = {r.window.lo, r.window.hi};
    out["classes"] = Json::array();
    for (const auto& row : r.classes) {
        Json b = Json::object();
        for (const auto& [k, v] : row.betti) b[std::to_string(k)] = v;
        out["classes"].push_back({{"reduced", format_divisor(g, row.key.reduced)},
                                  {"sink", g.name(row.key.sink)},
                                  {"degree", row.degree},
                                  {"betti", b}});
    }
    Json coarse = Json::object();
    for (const auto& [k, v] : r.coarse) coarse[std::to_string(k)] = v;
    out["coarse"] = coarse;
    out["warnings"] = r.warnings;
    return out;
}

Json verification_json(const Multigraph& g, const VerificationReport& r) {
    Json out = betti_json(g, r.betti);
    out["conjecture"] = Json::array();
    for (const auto& row : r.rows) {
        Json j{{"k", row.k}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"match", row.match}};
        if (!row.partitions.empty()) {
            j["partitions"] = Json::array();
            for (const auto& pc : row.partitions) {
                j["partitions"].push_back({{"partition", format_partition(g, pc.partition)},
                                           {"maximal_superstables", pc.maximal_superstables},
                                           {"unique_source_orientations", pc.unique_source_orientations}});
            }
        }
        out["conjecture"].push_back(j);
    }
    return out;
}

Json chain_json(const Multigraph* g, const SignedChain& c) {
    Json out = Json::array();
    for (const auto& [face, coef] : c.terms()) {
        Json f = Json::array();
        for (Vertex v : face) {
            if (g) f.push_back(g->name(v));
            else f.push_back(v);
        }
        out.push_back({{"face", f}, {"coefficient", coef.get_str()}});
    }
    return out;
}

std::string betti_table(const Multigraph& g, const BettiReport& r) {
    std::ostringstream os;
    os << "degree window [" << r.window.lo << ", " << r.window.hi << "]\n";
    for (const auto& row : r.classes) {
        os << "  class " << format_divisor(g, row.key.reduced) << "  deg " << row.degree << " ";
        for (const auto& [k, v] : row.betti) os << " b" << k << "=" << v;
        os << '\n';
    }
    for (const auto& [k, v] : r.coarse) os << "beta_" << k << " = " << v << '\n';
    for (const auto& w : r.warnings) os << "warning: " << w << '\n';
    return os.str();
}

std::string verification_table(const Multigraph& g, const VerificationReport& r) {
    std::ostringstream os;
    os << betti_table(g, r.betti);
    os << "k  lhs  rhs  match\n";
    for (const auto& row : r.rows) {
        os << row.k << "  " << row.lhs << "  " << row.rhs << "  " << (row.match ? "yes" : "NO") << '\n';
        for (const auto& pc : row.partitions) {
            os << "    " << format_partition(g, pc.partition) << "  maximal " << pc.maximal_superstables << "  aus "
               << pc.unique_source_orientations << '\n';
        }
    }
    return os.str();
}

}  // namespace chipfire::cli
