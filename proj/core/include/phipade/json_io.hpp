#pragma once

#include <string>

#include "phipade/approximant.hpp"

namespace phipade {

// JSON documents. Numbers are strings: "p/q" for exact values, decimal
// literals with full precision otherwise. On input, plain JSON numbers are
// accepted too (integers stay exact).

std::string series_to_json(const PowerSeries& series, unsigned digits = kDefaultDigits);
// Throws ParseError on malformed documents.
PowerSeries series_from_json(const std::string& text, const Context& ctx = {});

std::string phi_spec_to_json(const PhiSpec& spec, unsigned digits = kDefaultDigits);

// {spec, transform, n, poles, residues, polynomial, exact_poles?, exact_residues?, warnings}
std::string approximant_to_json(const PhiPadeApproximant& approx, unsigned digits = kDefaultDigits);
PhiPadeApproximant approximant_from_json(const std::string& text, const Context& ctx = {});

} // namespace phipade
