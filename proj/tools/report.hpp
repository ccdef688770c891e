#pragma once

#include <json.hpp>
#include <string>

#include "chipfire/cycles.hpp"
#include "chipfire/verify.hpp"

namespace chipfire::cli {

using Json = nlohmann::ordered_json;

Json betti_json(const Multigraph& g, const BettiReport& r);
Json verification_json(const Multigraph& g, const VerificationReport& r);
Json chain_json(const Multigraph* g, const SignedChain& c);

std::string betti_table(const Multigraph& g, const BettiReport& r);
std::string verification_table(const Multigraph& g, const VerificationReport& r);

}  // namespace chipfire::cli
