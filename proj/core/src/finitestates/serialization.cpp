#include "invset/finitestates/serialization.hpp"

#include <json.hpp>

#include "invset/errors.hpp"

namespace invset::finitestates {

using nlohmann::json;

std::string to_json(const FiniteHilbertState& s) {
  json amps = json::array();
  for (const auto& a : s.amplitudes()) {
    amps.push_back(json{{"m", a.m}, {"phase_turns", a.phase.turns().str()}});
  }
  return json{{"N", s.N()}, {"amps", std::move(amps)}}.dump();
}

FiniteHilbertState state_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state JSON: ") + e.what());
  }
  try {
    const auto N = doc.at("N").get<std::uint64_t>();
    std::vector<Amplitude> amps;
    for (const auto& a : doc.at("amps")) {
      const auto phase = a.at("phase_turns").get<std::string>();
      amps.push_back(Amplitude{a.at("m").get<std::uint64_t>(), RationalAngle::parse(phase)});
    }
    return FiniteHilbertState(N, std::move(amps));
  } catch (const json::exception& e) {
    throw ParseError(std::string("state JSON: ") + e.what());
  }
}

}  // namespace invset::finitestates
