#pragma once

#include <string>

#include "coverdepth/coverage.hpp"

namespace coverdepth {

// Decimal rendering used everywhere a double reaches an output stream:
// 12 significant digits, locale-independent, byte-stable across runs.
std::string format_double(double v);

std::string json_escape(const std::string& s);
std::string csv_quote(const std::string& s);

// {"num": "...", "den": "...", "approx": N}
std::string to_json(const Rational& r);
// {"p": .., "e": .., "modulus": [c_0, ..., c_e]}
std::string to_json(const FiniteField& f);
// {"n": .., "counts": ["...", ...]}
std::string to_json(const WeightDistribution& w);
// {"b": [[...], ...]}
std::string to_json(const ExtendedEnumerator& e);
// {"mean": .., "stderr": .., "trials": .., "seed": .., "rng": ".."}
std::string to_json(const MonteCarloResult& mc);
// {"method": "..", "exact": {...}|null, "mc": {...}|null}
std::string to_json(const ExpectationResult& r);

}  // namespace coverdepth
