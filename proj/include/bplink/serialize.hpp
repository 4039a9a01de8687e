#pragma once

// Record and checkpoint serialization: JSON lines and RFC-4180-style CSV
// with a fixed field order, exact rationals always as "num/den" strings.

#include <optional>
#include <string>

#include "json.hpp"

#include "bplink/search.hpp"

namespace bplink {

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

const char* to_string(PairMode mode);
const char* to_string(SphereCriterion criterion);
const char* to_string(ArfClass cls);
const char* to_string(SignatureMethod method);
PairMode pair_mode_from_string(const std::string& s);
SphereCriterion sphere_criterion_from_string(const std::string& s);
ArfClass arf_class_from_string(const std::string& s);

// Fixed field order: a, m, link_dim, fano_sum, upper_bound, passes, sphere,
// criterion, tau, bp_class, kervaire, moduli_real_dim, contact_excluded.
nlohmann::ordered_json record_to_json(const EnumerationRecord& record);
std::string record_to_json_line(const EnumerationRecord& record);
std::string csv_header();
std::string record_to_csv_row(const EnumerationRecord& record);

// Parsers rebuild the derived sequence data from the a field and restore
// every serialized field exactly; unserialized members (orientation-ignoring
// class, exotic flag) are recomputed.
EnumerationRecord record_from_json_line(const std::string& line);
EnumerationRecord record_from_csv_row(const std::string& row);

// Checkpoints are single JSON documents written atomically (temp + rename).
void save_checkpoint(const std::string& path, const SearchCheckpoint& checkpoint);
std::optional<SearchCheckpoint> load_checkpoint(const std::string& path);

}
