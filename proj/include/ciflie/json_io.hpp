#pragma once

#include <string>

#include "json.hpp"

#include "ciflie/cif_verify.hpp"

namespace ciflie::json_io {

using nlohmann::json;

// Rationals travel as exact "num/den" strings ("7/10"), integers without
// the denominator ("1"). Vectors are integer arrays in [0, p).

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json vector_to_json(const SuperVector& v);
SuperVector vector_from_json(const json& j, const LieSuperalgebra& alg);

/// {"p":..., "d0":..., "d1":..., "sc":[[i,j,k,value],...]} with only the
/// nonzero structure constants listed, sorted by (i,j,k).
json algebra_to_json(const LieSuperalgebra& alg);
AlgebraPtr algebra_from_json(const json& j);

/// {"algebra":..., "entries":[{"x":[...],"lr":...,"lw":...,"rr":...,"rw":...}]}
/// Emission is dense in element order. On load, "algebra" may be an inline
/// document or a file-reference string (resolved against base_dir), and an
/// optional "default" value covers unlisted elements.
json cifset_to_json(const CIFSet& a);
CIFSet cifset_from_json(const json& j, const std::string& base_dir = "");

json linear_map_to_json(const LinearMap& m);
LinearMap linear_map_from_json(const json& j, const std::string& base_dir = "");

json crisp_subset_to_json(const CrispSubset& s);

json witness_to_json(const Witness& w);
json verdict_to_json(const Verdict& v);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const json& j);

/// File helpers; a path of "-" reads stdin / writes stdout.
json load_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

/// Directory part of a path ("" when none); used to resolve references.
std::string dir_of(const std::string& path);

} // namespace ciflie::json_io
