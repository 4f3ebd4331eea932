#pragma once

#include <string>

#include <json.hpp>

#include "charwave/field.hpp"
#include "charwave/unichar.hpp"
#include "charwave/verify.hpp"
#include "charwave/wavechar.hpp"

namespace charwave {

// Deterministic emission: every float is printed with 17 significant digits
// (full round-trip precision), newline-terminated rows, no locale dependence,
// so identical inputs serialize to identical bytes.

std::string format_double(double v);

// Inverse-mapped samples: header t,x,u,<a_name>,<b_name>.
std::string samples_csv(const PhysicalSamples& samples);

// Unidirectional state over in-domain nodes: header T,Y,u,v,xi.
std::string state1_csv(const Grid1& grid, const State1& state);

// Wave state over in-domain nodes: header X,Y,u,w,v,p,q.
std::string state2_csv(const Grid2& grid, const State2& state);

// Per-iteration update norms (and p/q extrema for the wave family).
std::string history1_csv(const ConvergenceHistory& history);
std::string history2_csv(const ConvergenceHistory2& history);

// Serializes a JSON tree with %.17g numbers (nlohmann's shortest-round-trip
// default is also deterministic but does not honor the 17-digit contract).
std::string dump_json(const nlohmann::ordered_json& doc, int indent = 2);

// Writes content to path, creating parent directories; IoError on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace charwave
