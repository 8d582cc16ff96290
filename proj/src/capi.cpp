// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "onelap/onelap.h"

#include <cstring>
#include <new>
#include <string>

#include "onelap/error.hpp"
#include "onelap/io.hpp"

struct onelap_complex {
  onelap::SimplicialComplex k;
};

namespace {

thread_local std::string last_error;

onelap_status status_of(onelap::ErrorCode code) {
  using onelap::ErrorCode;
  switch (code) {
    case ErrorCode::DegenerateNorm:
    case ErrorCode::EmptyDimension:
      return ONELAP_DEGENERATE;
    case ErrorCode::BudgetExceeded:
      return ONELAP_BUDGET;
    default:
      return ONELAP_INPUT_ERROR;
  }
}

// Outputs stay null unless a call succeeds or is rejected with a report.
template <class... T>
void clear(T**... outs) {
  ((outs ? void(*outs = nullptr) : void()), ...);
}

// Runs f, translating exceptions into a status and the thread's error text.
template <class F>
onelap_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const onelap::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("ParseError: ") + e.what();
    return ONELAP_INPUT_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ONELAP_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ONELAP_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(const onelap::Json& j, char** out) {
  if (out) *out = copy_out(j.dump(2));
}

void require(const void* p, const char* what) {
  if (!p) throw onelap::Error(onelap::ErrorCode::EmptyInput, std::string(what) + " is null");
}

onelap::ProblemSpec spec_of(const onelap_complex* k, onelap_problem p) {
  require(k, "complex");
  return {k->k, p.dim, p.op == ONELAP_DOWN ? onelap::Adjacency::Down : onelap::Adjacency::Up,
          p.normalization == ONELAP_UNNORMALIZED ? onelap::Normalization::Unnormalized
                                                 : onelap::Normalization::Normalized};
}

onelap::ChainVector read_vector(const onelap::ProblemSpec& spec, const char* json) {
  require(json, "vector");
  const auto sys = onelap::IncidenceSystem::from_spec(spec);
  return onelap::vector_from_json(onelap::Json::parse(json), sys.columns());
}

onelap::Rational read_mu(const char* mu) {
  require(mu, "mu");
  return onelap::parse_rational(mu);
}

onelap::Normalization normalization_of(onelap_normalization n) {
  return n == ONELAP_UNNORMALIZED ? onelap::Normalization::Unnormalized
                                  : onelap::Normalization::Normalized;
}

}  // namespace

extern "C" {

const char* onelap_version(void) { return "0.1.0"; }

const char* onelap_last_error(void) { return last_error.c_str(); }

void onelap_string_free(char* text) { std::free(text); }

onelap_status onelap_complex_from_json(const char* json, onelap_complex** out) {
  return guarded([&] {
    clear(out);
    require(json, "json");
    require(out, "out");
    *out = new onelap_complex{onelap::complex_from_json(onelap::Json::parse(json))};
    return ONELAP_OK;
  });
}

onelap_status onelap_complex_builtin(const char* name, onelap_complex** out) {
  return guarded([&] {
    clear(out);
    require(name, "name");
    require(out, "out");
    *out = new onelap_complex{onelap::builtin_complex(name)};
    return ONELAP_OK;
  });
}

onelap_status onelap_complex_to_json(const onelap_complex* k, char** out) {
  return guarded([&] {
    clear(out);
    require(k, "complex");
    emit(onelap::complex_to_json(k->k), out);
    return ONELAP_OK;
  });
}

size_t onelap_complex_num_faces(const onelap_complex* k, int dim) {
  return k ? k->k.num_faces(dim) : 0;
}

onelap_status onelap_complex_faces(const onelap_complex* k, int dim, char** out) {
  return guarded([&] {
    clear(out);
    require(k, "complex");
    onelap::Json j = onelap::Json::array();
    for (const auto& f : k->k.faces_of_dim(dim)) j.push_back(f.key());
    emit(j, out);
    return ONELAP_OK;
  });
}

void onelap_complex_free(onelap_complex* k) { delete k; }

onelap_status onelap_spectrum(const onelap_complex* k, onelap_problem problem,
                              const onelap_spectrum_options* options, char** report) {
  return guarded([&] {
    clear(report);
    onelap::SpectrumOptions opts;
    if (options) {
      opts.threads = options->threads;
      if (options->witness_cap) opts.witness_cap = options->witness_cap;
      opts.keep_all_witnesses = options->all_witnesses != 0;
    }
    emit(onelap::spectrum_json(onelap::compute_spectrum(spec_of(k, problem), opts)), report);
    return ONELAP_OK;
  });
}

onelap_status onelap_verify(const onelap_complex* k, onelap_problem problem, const char* mu,
                            const char* vector_json, char** report) {
  return guarded([&] {
    clear(report);
    const auto spec = spec_of(k, problem);
    const auto m = read_mu(mu);
    const auto x = read_vector(spec, vector_json);
    const auto sys = onelap::IncidenceSystem::from_spec(spec);
    const auto v = onelap::verify_eigenpair(sys, m, x);
    auto j = onelap::verdict_json(sys, v);
    j["mu"] = onelap::to_string(m);
    j["rayleigh_quotient"] = onelap::to_string(onelap::rayleigh_quotient(sys, x));
    emit(j, report);
    return v.accepted ? ONELAP_OK : ONELAP_REJECTED;
  });
}

onelap_status onelap_invariants(const onelap_complex* k, char** report) {
  return guarded([&] {
    clear(report);
    require(k, "complex");
    emit(onelap::invariants_json(k->k), report);
    return ONELAP_OK;
  });
}

onelap_status onelap_bounds(const onelap_complex* k, int dim, onelap_volume volume,
                            char** report) {
  return guarded([&] {
    clear(report);
    require(k, "complex");
    const auto vol = volume == ONELAP_VOLUME_CONSTANT ? onelap::VolumeMode::Constant
                                                      : onelap::VolumeMode::UpDegree;
    const auto r = onelap::bound_report(k->k, dim, onelap::bound_inputs(k->k, dim, vol), vol);
    emit(onelap::bound_report_json(r), report);
    return r.all_hold() ? ONELAP_OK : ONELAP_REJECTED;
  });
}

onelap_status onelap_nodal(const onelap_complex* k, onelap_problem problem, const char* mu,
                           const char* vector_json, char** report) {
  return guarded([&] {
    clear(report);
    const auto spec = spec_of(k, problem);
    const auto x = read_vector(spec, vector_json);
    const auto r = onelap::check_nodal_restriction_property(spec, read_mu(mu), x);
    emit(onelap::nodal_json(spec, r), report);
    return !r.input.accepted || r.all_accepted() ? ONELAP_OK : ONELAP_REJECTED;
  });
}

onelap_status onelap_wedge(const onelap_complex* k1, const char* face1, const onelap_complex* k2,
                           const char* face2, onelap_complex** out) {
  return guarded([&] {
    clear(out);
    require(k1, "first complex");
    require(k2, "second complex");
    require(face1, "first face");
    require(face2, "second face");
    require(out, "out");
    *out = new onelap_complex{
        onelap::wedge_sum(k1->k, onelap::parse_face(face1), k2->k, onelap::parse_face(face2))};
    return ONELAP_OK;
  });
}

onelap_status onelap_wedge_check(const onelap_complex* k1, const char* face1,
                                 const onelap_complex* k2, const char* face2,
                                 onelap_problem problem, char** report) {
  return guarded([&] {
    clear(report);
    require(k2, "second complex");
    require(face1, "first face");
    require(face2, "second face");
    const auto spec = spec_of(k1, problem);
    const auto r =
        onelap::check_wedge_spectrum(k1->k, onelap::parse_face(face1), k2->k,
                                     onelap::parse_face(face2), spec.dim, spec.op,
                                     spec.normalization);
    emit(onelap::wedge_check_json(r), report);
    return r.holds() ? ONELAP_OK : ONELAP_REJECTED;
  });
}

onelap_status onelap_duplicate(const onelap_complex* k, const char* motif, onelap_complex** out,
                               char** report) {
  return guarded([&] {
    clear(out, report);
    require(k, "complex");
    require(motif, "motif");
    const auto m = onelap::closure(k->k, onelap::parse_face_list(motif));
    const auto dup = onelap::duplication(k->k, m);
    emit(onelap::duplication_json(k->k, m, dup), report);
    if (out) *out = new onelap_complex{dup.complex};
    return ONELAP_OK;
  });
}

onelap_status onelap_duplicate_check(const onelap_complex* k, const char* motif,
                                     onelap_normalization normalization, char** report) {
  return guarded([&] {
    clear(report);
    require(k, "complex");
    require(motif, "motif");
    const auto m = onelap::closure(k->k, onelap::parse_face_list(motif));
    const auto shape = onelap::is_i_motif(k->k, m);
    if (!shape.is_motif()) throw onelap::Error(onelap::ErrorCode::NotAMotif, shape.reason);
    const int i = shape.link_dim;
    const auto norm = normalization_of(normalization);
    const auto star = onelap::star_system(k->k, m, i, norm);

    onelap::Json j;
    j["link_dim"] = i;
    j["normalization"] = onelap::to_string(norm);
    j["star_faces"] = onelap::Json::array();
    for (const auto& f : star.columns) j["star_faces"].push_back(f.key());
    onelap::SpectrumOptions all;
    all.keep_all_witnesses = true;
    const auto restricted = onelap::compute_spectrum(star.system, all);
    j["restricted_eigenvalues"] = onelap::Json::array();
    for (const auto& mu : restricted.eigenvalues) {
      j["restricted_eigenvalues"].push_back(onelap::to_string(mu));
    }
    bool ok = true;
    std::size_t checked = 0;
    j["failures"] = onelap::Json::array();
    for (const auto& [mu, list] : restricted.witnesses) {
      for (const auto& w : list) {
        const auto r = onelap::check_duplication_eigenpair(k->k, m, i, mu, w.x, norm);
        ++checked;
        if (!r.verdict.accepted) {
          ok = false;
          j["failures"].push_back({{"mu", onelap::to_string(mu)},
                                   {"h", onelap::vector_to_json(star.columns, w.x)}});
        }
      }
    }
    j["lifted_checked"] = checked;

    // eigenvectors of the closed star that vanish on the link
    const onelap::ProblemSpec closed{star.closed_star, i, onelap::Adjacency::Up, norm};
    j["vanishing_on_link"] = onelap::Json::array();
    for (const auto& [mu, list] : onelap::compute_spectrum(closed, all).witnesses) {
      for (const auto& w : list) {
        onelap::ChainVector h;
        try {
          h = onelap::star_part(k->k, m, i, w.x);
        } catch (const onelap::Error&) {
          continue;
        }
        const auto r = onelap::check_duplication_eigenpair(k->k, m, i, mu, h, norm);
        ok = ok && r.verdict.accepted;
        j["vanishing_on_link"].push_back(
            {{"mu", onelap::to_string(mu)}, {"accepted", r.verdict.accepted}});
      }
    }
    j["holds"] = ok;
    emit(j, report);
    return ok ? ONELAP_OK : ONELAP_REJECTED;
  });
}

onelap_status onelap_oracle(const onelap_complex* k, onelap_problem problem, size_t bound,
                            size_t budget, char** report) {
  return guarded([&] {
    clear(report);
    const auto spec = spec_of(k, problem);
    const std::size_t n = spec.complex.num_faces(spec.dim);
    const std::size_t c = bound ? bound : onelap::default_grid_bound(n);
    const auto oracle = budget ? onelap::grid_oracle_spectrum(spec, c, budget)
                               : onelap::grid_oracle_spectrum(spec, c);
    const auto engine = onelap::compute_spectrum(spec);
    const std::vector<onelap::Rational> grid(oracle.begin(), oracle.end());
    onelap::Json j;
    j["grid_bound"] = c;
    j["oracle"] = onelap::Json::array();
    for (const auto& mu : grid) j["oracle"].push_back(onelap::to_string(mu));
    j["engine"] = onelap::Json::array();
    for (const auto& mu : engine.eigenvalues) j["engine"].push_back(onelap::to_string(mu));
    j["equal"] = grid == engine.eigenvalues;
    emit(j, report);
    return grid == engine.eigenvalues ? ONELAP_OK : ONELAP_REJECTED;
  });
}

}  // extern "C"
