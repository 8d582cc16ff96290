// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "onelap/onelap.h"

using Json = nlohmann::ordered_json;

namespace {

struct Failure {
  int code;
  std::string message;
};

using Complex = std::unique_ptr<onelap_complex, decltype(&onelap_complex_free)>;

Complex own(onelap_complex* k) { return {k, &onelap_complex_free}; }

// Throws a Failure when a call fails, so commands read straight through.
void check(onelap_status s) {
  if (s != ONELAP_OK) throw Failure{s, onelap_last_error()};
}

// Takes ownership of a report string; a rejected status still carries one.
Json take(char* text) {
  if (!text) return Json();
  Json j = Json::parse(text);
  onelap_string_free(text);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{ONELAP_INPUT_ERROR, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Failure{ONELAP_INPUT_ERROR, "cannot write " + path};
  out << text << "\n";
}

struct Source {
  std::string input;
  std::string builtin;

  void add(CLI::App* cmd, const std::string& suffix = "") {
    auto* in = cmd->add_option("--input" + suffix, input, "complex JSON file");
    auto* b = cmd->add_option("--builtin" + suffix, builtin, "simplex:n, path or remark5");
    in->excludes(b);
  }

  Complex load() const {
    onelap_complex* k = nullptr;
    if (!input.empty()) {
      check(onelap_complex_from_json(read_file(input).c_str(), &k));
    } else if (!builtin.empty()) {
      check(onelap_complex_builtin(builtin.c_str(), &k));
    } else {
      throw Failure{ONELAP_INPUT_ERROR, "give --input FILE or --builtin NAME"};
    }
    return own(k);
  }
};

struct Problem {
  int dim = 0;
  std::string op = "up";
  std::string norm = "normalized";

  void add(CLI::App* cmd, bool dim_required = true) {
    auto* d = cmd->add_option("--dim", dim, "face dimension d");
    if (dim_required) d->required();
    cmd->add_option("--op", op, "up or down")->check(CLI::IsMember({"up", "down"}));
    cmd->add_option("--norm", norm, "normalized or unnormalized")
        ->check(CLI::IsMember({"normalized", "unnormalized"}));
  }

  onelap_problem get() const {
    return {dim, op == "down" ? ONELAP_DOWN : ONELAP_UP,
            norm == "unnormalized" ? ONELAP_UNNORMALIZED : ONELAP_NORMALIZED};
  }
};

struct Vector {
  std::string file;
  std::string values;

  void add(CLI::App* cmd) {
    auto* f = cmd->add_option("--vector", file, "vector JSON file (face key -> \"p/q\")");
    auto* v = cmd->add_option("--values", values, "comma-separated values in face order");
    f->excludes(v);
  }

  std::string json(const onelap_complex* k, int dim) const {
    if (!file.empty()) return read_file(file);
    if (values.empty()) throw Failure{ONELAP_INPUT_ERROR, "give --vector FILE or --values LIST"};
    char* text = nullptr;
    check(onelap_complex_faces(k, dim, &text));
    const Json faces = take(text);
    Json out = Json::object();
    std::stringstream in(values);
    std::string item;
    std::size_t i = 0;
    while (std::getline(in, item, ',')) {
      if (i >= faces.size()) break;
      out[faces[i++].get<std::string>()] = item;
    }
    if (i != faces.size() || std::getline(in, item, ',')) {
      throw Failure{ONELAP_INPUT_ERROR, "--values needs " + std::to_string(faces.size()) +
                                            " entries for dimension " + std::to_string(dim)};
    }
    return out.dump();
  }
};

std::string braces(const Json& list) {
  std::string s = "{";
  for (std::size_t i = 0; i < list.size(); ++i) s += (i ? ", " : "") + list[i].get<std::string>();
  return s + "}";
}

std::string join(const Json& list) {
  std::string s;
  for (std::size_t i = 0; i < list.size(); ++i) s += (i ? ", " : "") + list[i].get<std::string>();
  return s;
}

std::string vector_text(const Json& v) {
  std::string s = "(";
  bool first = true;
  for (const auto& [key, value] : v.items()) {
    s += (first ? "" : ", ") + value.get<std::string>();
    first = false;
  }
  return s + ")";
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signless 1-Laplacian spectra of simplicial complexes, in exact arithmetic."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(onelap_version()));

  bool as_json = false;
  std::optional<long> seed;
  unsigned threads = 1;
  std::string out_path;
  auto common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "print the JSON report");
    cmd->add_option("--seed", seed, "echoed in the report");
  };

  // spectrum
  Source src;
  Problem prob;
  bool all_witnesses = false;
  auto* spectrum = app.add_subcommand("spectrum", "all eigenvalues with witness vectors");
  src.add(spectrum);
  prob.add(spectrum);
  common(spectrum);
  spectrum->add_option("--threads", threads, "verifier threads");
  spectrum->add_flag("--all-witnesses", all_witnesses, "keep every witness, not 8 per value");

  // verify
  std::string mu;
  Vector vec;
  auto* verify = app.add_subcommand("verify", "decide whether (mu, x) is an eigenpair");
  src.add(verify);
  prob.add(verify);
  common(verify);
  verify->add_option("--mu", mu, "eigenvalue p/q")->required();
  vec.add(verify);

  // invariants
  auto* invariants = app.add_subcommand("invariants", "independence and coloring numbers");
  src.add(invariants);
  common(invariants);

  // bounds
  std::string vol = "updegree";
  auto* bounds = app.add_subcommand("bounds", "check the spectral and combinatorial inequalities");
  src.add(bounds);
  bounds->add_option("--dim", prob.dim, "face dimension d")->required();
  bounds->add_option("--vol", vol, "volume of the coloring bound: updegree or constant")
      ->check(CLI::IsMember({"updegree", "constant"}));
  common(bounds);

  // nodal
  auto* nodal = app.add_subcommand("nodal", "nodal domains and their restrictions");
  src.add(nodal);
  prob.add(nodal);
  common(nodal);
  nodal->add_option("--mu", mu, "eigenvalue p/q")->required();
  vec.add(nodal);

  // wedge
  Source src2;
  std::string face1, face2;
  bool check_spectra = false;
  auto* wedge = app.add_subcommand("wedge", "glue two complexes along a face");
  src.add(wedge);
  src2.add(wedge, "2");
  wedge->add_option("--face", face1, "face of the first complex, e.g. 1,2")->required();
  wedge->add_option("--face2", face2, "face of the second complex")->required();
  wedge->add_option("--out", out_path, "write the glued complex here");
  wedge->add_flag("--check", check_spectra, "compare spectra at --dim/--op/--norm");
  prob.add(wedge, false);
  common(wedge);

  // duplicate
  std::string motif;
  auto* duplicate = app.add_subcommand("duplicate", "duplicate a motif");
  src.add(duplicate);
  duplicate->add_option("--motif", motif, "faces of the motif, e.g. 1,2;4")->required();
  duplicate->add_option("--out", out_path, "write the duplicated complex here");
  duplicate->add_flag("--check", check_spectra, "lift restricted eigenpairs to the result");
  duplicate->add_option("--norm", prob.norm, "normalized or unnormalized")
      ->check(CLI::IsMember({"normalized", "unnormalized"}));
  common(duplicate);

  // oracle
  std::size_t grid_bound = 0, budget = 0;
  auto* oracle = app.add_subcommand("oracle", "brute-force grid spectrum against the engine");
  src.add(oracle);
  prob.add(oracle);
  common(oracle);
  oracle->add_option("--grid-bound", grid_bound, "coordinate bound C (default (N-1)!)");
  oracle->add_option("--budget", budget, "maximum grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ONELAP_INPUT_ERROR;
  }

  int code = 0;
  try {
    Json report;
    auto finish = [&](onelap_status s, char* text) {  // callers store the status first
      report = take(text);
      if (seed && report.is_object()) report["seed"] = *seed;
      if (s != ONELAP_OK && s != ONELAP_REJECTED) check(s);
      code = s;
    };
    if (seed && !as_json) std::cout << "seed = " << *seed << "\n";

    if (*spectrum) {
      const auto k = src.load();
      onelap_spectrum_options opts{threads, 0, all_witnesses ? 1 : 0};
      char* text = nullptr;
      const onelap_status st1 = onelap_spectrum(k.get(), prob.get(), &opts, &text);
      finish(st1, text);
      if (as_json) {
        print(report);
      } else {
        std::cout << join(report["eigenvalues"]) << "\n";
        std::cout << "faces: " << join(report["problem"]["faces"]) << "\n";
        for (const auto& [value, list] : report["witnesses"].items()) {
          for (const auto& w : list) std::cout << "  " << value << "  x = " << vector_text(w["vector"]) << "\n";
        }
      }
    } else if (*verify) {
      const auto k = src.load();
      const std::string x = vec.json(k.get(), prob.dim);
      char* text = nullptr;
      const onelap_status st2 = onelap_verify(k.get(), prob.get(), mu.c_str(), x.c_str(), &text);
      finish(st2, text);
      if (as_json) {
        print(report);
      } else if (code == ONELAP_OK) {
        std::cout << "accepted\n" << report["certificate"].dump(2) << "\n";
      } else {
        std::cout << "rejected: " << report["reason"].get<std::string>()
                  << " (energy/norm = " << report["rayleigh_quotient"].get<std::string>() << ")\n";
      }
    } else if (*invariants) {
      const auto k = src.load();
      char* text = nullptr;
      const onelap_status st3 = onelap_invariants(k.get(), &text);
      finish(st3, text);
      if (as_json) {
        print(report);
      } else {
        std::cout << "alpha = " << report["alpha"] << "\n";
        std::cout << "chi = " << (report["chi"].is_null() ? "undefined" : report["chi"].dump()) << "\n";
        for (const auto& [s, v] : report["alpha_s"].items()) std::cout << "alpha_" << s << " = " << v << "\n";
        for (const auto& [s, v] : report["chi_s"].items()) std::cout << "chi_" << s << " = " << v << "\n";
        for (const auto& e : report["by_dim"]) {
          std::cout << "d = " << e["dim"] << ": face chi = " << e["face_chi"]
                    << ", alpha(up) = " << e["alpha_up"] << ", kappa(up) = " << e["kappa_up"];
          if (e.contains("alpha_down")) {
            std::cout << ", alpha(down) = " << e["alpha_down"] << ", kappa(down) = " << e["kappa_down"];
          }
          std::cout << "\n";
        }
      }
    } else if (*bounds) {
      const auto k = src.load();
      char* text = nullptr;
      const auto v = vol == "constant" ? ONELAP_VOLUME_CONSTANT : ONELAP_VOLUME_UPDEGREE;
      const onelap_status st4 = onelap_bounds(k.get(), prob.dim, v, &text);
      finish(st4, text);
      if (as_json) {
        print(report);
      } else {
        for (const auto& [name, value] : report["inputs"].items()) {
          std::cout << "  " << name << " = " << value.get<std::string>() << "\n";
        }
        for (const auto& l : report["lines"]) {
          std::cout << (l["holds"].get<bool>() ? "holds  " : "FAILS  ") << l["name"].get<std::string>()
                    << ": " << l["left"].get<std::string>() << " " << l["relation"].get<std::string>()
                    << " " << l["right"].get<std::string>();
          if (l.contains("note")) std::cout << "  (" << l["note"].get<std::string>() << ")";
          std::cout << "\n";
        }
      }
    } else if (*nodal) {
      const auto k = src.load();
      const std::string x = vec.json(k.get(), prob.dim);
      char* text = nullptr;
      const onelap_status st5 = onelap_nodal(k.get(), prob.get(), mu.c_str(), x.c_str(), &text);
      finish(st5, text);
      if (as_json) {
        print(report);
      } else {
        std::cout << report["count"] << " nodal domain(s); (mu, x) "
                  << (report["input"]["accepted"].get<bool>() ? "is" : "is not") << " an eigenpair\n";
        for (const auto& d : report["domains"]) {
          std::cout << "  {" << join(d["faces"]) << "}  restriction "
                    << vector_text(d["restriction"]) << "  "
                    << (d["verdict"]["accepted"].get<bool>() ? "accepted" : "rejected") << "\n";
        }
      }
    } else if (*wedge) {
      const auto k1 = src.load();
      const auto k2 = src2.load();
      onelap_complex* w = nullptr;
      check(onelap_wedge(k1.get(), face1.c_str(), k2.get(), face2.c_str(), &w));
      const auto glued = own(w);
      char* text = nullptr;
      check(onelap_complex_to_json(glued.get(), &text));
      const Json complex = take(text);
      if (!out_path.empty()) write_file(out_path, complex.dump(2));
      if (check_spectra) {
        char* rtext = nullptr;
        const onelap_status st6 = onelap_wedge_check(k1.get(), face1.c_str(), k2.get(), face2.c_str(), prob.get(), &rtext);
      finish(st6, rtext);
        if (as_json) {
          print(report);
        } else {
          std::cout << "wedge: " << braces(report["wedge_spectrum"]) << "\n"
                    << "union: " << braces(report["union"]) << "\n"
                    << (code == ONELAP_OK ? "equal" : "DIFFERENT") << "\n";
        }
      } else if (as_json || out_path.empty()) {
        print(complex);
      }
    } else if (*duplicate) {
      const auto k = src.load();
      onelap_complex* d = nullptr;
      char* text = nullptr;
      const onelap_status st7 = onelap_duplicate(k.get(), motif.c_str(), &d, &text);
      finish(st7, text);
      const auto dup = own(d);
      const Json info = report;
      if (!out_path.empty()) write_file(out_path, info["complex"].dump(2));
      if (check_spectra) {
        char* rtext = nullptr;
        const auto n = prob.norm == "unnormalized" ? ONELAP_UNNORMALIZED : ONELAP_NORMALIZED;
        const onelap_status st8 = onelap_duplicate_check(k.get(), motif.c_str(), n, &rtext);
      finish(st8, rtext);
        if (as_json) {
          print(report);
        } else {
          std::cout << "link dimension " << report["link_dim"] << "; restricted eigenvalues "
                    << braces(report["restricted_eigenvalues"]) << "\n"
                    << report["lifted_checked"] << " lifted eigenpair(s), "
                    << report["failures"].size() << " rejected\n";
        }
      } else if (as_json || out_path.empty()) {
        print(info);
      }
    } else if (*oracle) {
      const auto k = src.load();
      char* text = nullptr;
      const onelap_status st9 = onelap_oracle(k.get(), prob.get(), grid_bound, budget, &text);
      finish(st9, text);
      if (as_json) {
        print(report);
      } else if (code == ONELAP_OK) {
        std::cout << "oracle = engine = " << braces(report["engine"]) << "\n";
      } else {
        std::cout << "oracle = " << braces(report["oracle"]) << ", engine = " << braces(report["engine"])
                  << "\n";
      }
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ONELAP_INPUT_ERROR;
  }
  return code;
}
