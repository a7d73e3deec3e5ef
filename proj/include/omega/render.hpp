#ifndef OMEGA_RENDER_HPP
#define OMEGA_RENDER_HPP

#include <string>

#include <nlohmann/json.hpp>

#include <omega/partitions.hpp>
#include <omega/poly.hpp>

namespace omega {

enum class Format { plain, latex, json };
enum class Notation { letters, indexed };

Format format_from_name(const std::string& name);
Notation notation_from_name(const std::string& name);

// Letter-per-color naming is only available for rho <= 3; colors map to the
// last rho letters of (x, y, z), parameters to the last rho of (r, s, t).
Notation default_notation(const PartitionSpec& spec);

std::string variable_name(VarIndex v, const PartitionSpec& spec, Format f, Notation n);
std::string parameter_name(VarIndex v, const PartitionSpec& spec, Format f, Notation n);

std::string render_monomial(const Monomial& m, const PartitionSpec& spec,
                            Format f, Notation n);

// Terms in canonical monomial order; for Format::json this is the stable
// schema {"spec": ..., "n": ..., "terms": [...]}.
std::string render_omega(const OmegaPoly& P, long long n, Format f, Notation nt);

nlohmann::ordered_json omega_to_json(const OmegaPoly& P, long long n);
// Inverse of omega_to_json; returns the polynomial and writes back n.
OmegaPoly omega_from_json(const nlohmann::ordered_json& j, long long* n_out = nullptr);

nlohmann::ordered_json partition_to_json(const ColoredPartition& p);

} // namespace omega

#endif
