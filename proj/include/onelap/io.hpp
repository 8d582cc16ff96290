// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "onelap/combinatorics.hpp"
#include "onelap/constructions.hpp"
#include "onelap/nodal.hpp"
#include "onelap/spectrum.hpp"

namespace onelap {

using Json = nlohmann::ordered_json;

/// {"vertices": [ids]?, "maximal_faces": [[ids]...]}. Listed vertices that lie
/// in no face become isolated vertices; face vertices must be listed when the
/// list is present. Throws ParseError on malformed input.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& k);

/// "simplex:n", "path" (1-2-3) or "remark5" ([1,2,3],[1,4],[2,5]).
SimplicialComplex builtin_complex(const std::string& name);

/// "v1,v2,...,vk".
Face parse_face(const std::string& key);
/// Faces separated by ';', e.g. "1,2;3".
std::vector<Face> parse_face_list(const std::string& text);

/// Face key -> "p/q" over the given faces. Missing faces are zero; unknown
/// keys throw FaceNotInComplex.
ChainVector vector_from_json(const Json& j, const std::vector<Face>& faces);
/// Comma-separated values in face order, e.g. "1,-1,1/2".
ChainVector vector_from_list(const std::string& text, std::size_t size);
Json vector_to_json(const std::vector<Face>& faces, const ChainVector& x);

std::string to_string(Adjacency op);
std::string to_string(Normalization n);
std::string to_string(VolumeMode v);
Adjacency parse_adjacency(const std::string& text);
Normalization parse_normalization(const std::string& text);
VolumeMode parse_volume(const std::string& text);

Json problem_json(const ProblemSpec& spec);
Json verdict_json(const IncidenceSystem& sys, const Verdict& v);
/// {problem, eigenvalues[], witnesses{}, stats{}}.
Json spectrum_json(const SpectrumReport& report);
Json bound_report_json(const BoundReport& report);
Json invariants_json(const SimplicialComplex& k, const SearchBudget& budget = {});
Json nodal_json(const ProblemSpec& spec, const NodalReport& report);
Json wedge_check_json(const WedgeSpectrumCheck& check);
Json duplication_json(const SimplicialComplex& k, const std::vector<Face>& m,
                      const Duplication& dup);

/// Comma-separated rationals, e.g. "0, 1/2, 1".
std::string join(const std::vector<Rational>& values);

}  // namespace onelap
