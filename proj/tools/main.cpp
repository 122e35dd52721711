/*
   Copyright 2026 The mubkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mubkit/entangle.hpp"
#include "mubkit/geometry.hpp"
#include "mubkit/io.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/pauli.hpp"
#include "mubkit/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct Options {
  std::size_t dim = 0;
  std::string construction = "auto";
  std::string format = "records";
  long cap = mubkit::kDefaultDimCap;
  std::string out;
  std::string input;       // verify: path or "-" for stdin
  std::string object;      // geometry: fano | lifted | plane
  std::string target;      // tables: gf8 | gr43 | gf | gr4
  unsigned long order = 2; // geometry plane order
  int p = 2;
  int m = 1;
};

void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.out);
  out << payload;
}

mubkit::MubSet build_mub_set(const Options& opt) {
  using namespace mubkit;
  const std::size_t d = opt.dim;
  if (opt.construction == "auto") return mub_auto(d, opt.cap);
  if (opt.construction == "fourier") {
    if (d < 1) throw std::invalid_argument("fourier: dim must be positive");
    std::vector<Basis> bases{computational_basis(d)};
    if (d > 1) bases.push_back(fourier_basis(d));
    return MubSet(d, std::move(bases), MubProvenance{"fourier", "any", {}});
  }
  if (opt.construction == "gates") {
    if (d != 2) throw std::invalid_argument("gates: only dim 2");
    GateBases g = qubit_gate_bases();
    return MubSet(2, {g.identity, g.hadamard, g.hadamard_s}, MubProvenance{"gates", "prime", {}});
  }
  if (opt.construction == "field") {
    auto [p, e] = prime_power(d);
    if (p == 0 || p == 2) throw std::invalid_argument("field: dim must be an odd prime power");
    return mub_odd_prime_power(static_cast<int>(p), static_cast<int>(e), opt.cap);
  }
  if (opt.construction == "ring") {
    auto [p, e] = prime_power(d);
    if (p != 2) throw std::invalid_argument("ring: dim must be a power of 2");
    return mub_even(static_cast<int>(e), opt.cap);
  }
  if (opt.construction == "tensor") return mub_composite(d, opt.cap);
  throw std::invalid_argument("unknown construction: " + opt.construction);
}

mubkit::BellFamily build_bell_family(const Options& opt) {
  using namespace mubkit;
  const std::size_t d = opt.dim;
  if (opt.construction == "auto") return bell_auto(d, opt.cap);
  if (opt.construction == "fourier") return bell_basis(d, opt.cap);
  if (opt.construction == "field") {
    auto [p, e] = prime_power(d);
    if (p == 0 || p == 2) throw std::invalid_argument("field: dim must be an odd prime power");
    return bell_odd(static_cast<int>(p), static_cast<int>(e), opt.cap);
  }
  if (opt.construction == "ring") {
    auto [p, e] = prime_power(d);
    if (p != 2) throw std::invalid_argument("ring: dim must be a power of 2");
    return bell_even(static_cast<int>(e), opt.cap);
  }
  if (opt.construction == "tensor") return bell_composite(d, opt.cap);
  throw std::invalid_argument("construction not available for bell: " + opt.construction);
}

int cmd_generate(const Options& opt) {
  mubkit::MubSet set = build_mub_set(opt);
  mubkit::MubReport report = mubkit::verify_mub_set(set);
  emit(opt, opt.format == "text" ? mubkit::mub_set_to_string(set) : mubkit::mub_set_to_record(set));
  std::cerr << mubkit::mub_report_to_string(report);
  return report.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_bell(const Options& opt) {
  mubkit::BellFamily family = build_bell_family(opt);
  mubkit::BellReport report = mubkit::verify_bell_family(family);
  emit(opt, opt.format == "text" ? mubkit::bell_family_to_string(family)
                                 : mubkit::bell_family_to_record(family));
  std::cerr << mubkit::bell_report_to_string(report);
  return report.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const Options& opt) {
  std::string text;
  if (opt.input.empty() || opt.input == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) {
      std::cerr << "cannot open input file: " << opt.input << "\n";
      return kExitBadInput;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }

  // The record kind selects the verifier; provenance is ignored on re-check.
  if (mubkit::record_kind(text) == "bell_family") {
    mubkit::BellFamily family = mubkit::bell_family_from_record(text);
    mubkit::BellReport report = mubkit::verify_bell_family(family);
    emit(opt, opt.format == "records" ? mubkit::bell_report_to_record(report)
                                      : mubkit::bell_report_to_string(report));
    return report.pass ? kExitOk : kExitVerifyFailed;
  }
  mubkit::MubSet set = mubkit::mub_set_from_record(text);
  if (set.basis_count() == 0)
    std::cerr << "warning: empty basis list; verification passes vacuously\n";
  mubkit::MubReport report = mubkit::verify_mub_set(set);
  emit(opt, opt.format == "records" ? mubkit::mub_report_to_record(report)
                                    : mubkit::mub_report_to_string(report));
  return report.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_geometry(const Options& opt) {
  using namespace mubkit;
  IncidencePlane plane;
  std::string extra;
  if (opt.object == "fano") {
    plane = fano_from_gf8();
  } else if (opt.object == "plane") {
    plane = projective_plane(opt.order, opt.cap);
  } else if (opt.object == "lifted") {
    auto ctx = RingContext::create(3);
    LiftedFano lifted = lifted_fano(ctx);
    plane = lifted.plane;
    std::ostringstream os;
    os << lifted_fano_table_to_string(*ctx, lifted);
    auto iso = find_plane_isomorphism(plane, fano_from_gf8());
    os << "isomorphic to the Fano plane: " << (iso ? "yes" : "NO") << "\n";
    extra = os.str();
  } else {
    throw std::invalid_argument("geometry object must be fano, lifted or plane");
  }
  PlaneReport report = verify_plane_axioms(plane);
  emit(opt, opt.format == "text" ? plane_to_string(plane) + extra : plane_to_record(plane));
  std::cerr << (report.pass ? "PASS" : "FAIL") << " plane axioms: order " << report.order << ", "
            << report.point_count << " points, " << report.line_count << " lines\n";
  for (const auto& f : report.failures) std::cerr << "  " << f << "\n";
  return report.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_tables(const Options& opt) {
  using namespace mubkit;
  if (opt.target == "gf8" || opt.target == "gf") {
    auto rows = opt.target == "gf8" ? representation_table(2, 3)
                                    : representation_table(opt.p, opt.m);
    emit(opt, opt.format == "text" ? field_table_to_string(rows) : field_table_to_record(rows));
    return kExitOk;
  }
  if (opt.target == "gr43" || opt.target == "gr4") {
    auto ctx = RingContext::create(opt.target == "gr43" ? 3 : opt.m);
    auto rows = ring_representation_table(*ctx);
    emit(opt, opt.format == "text" ? ring_table_to_string(rows) : ring_table_to_record(rows));
    return kExitOk;
  }
  throw std::invalid_argument("tables target must be gf8, gr43, gf or gr4");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mutually unbiased bases, Bell families and finite geometry"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_dim) {
    if (with_dim)
      cmd->add_option("--dim", opt.dim, "Hilbert space dimension")->required();
    cmd->add_option("--construction", opt.construction,
                    "auto|fourier|gates|field|ring|tensor")
        ->check(CLI::IsMember({"auto", "fourier", "gates", "field", "ring", "tensor"}));
    cmd->add_option("--format", opt.format, "text|records")
        ->check(CLI::IsMember({"text", "records"}));
    cmd->add_option("--cap", opt.cap, "dimension cap");
    cmd->add_option("--out", opt.out, "output path (default stdout)");
  };

  CLI::App* generate = app.add_subcommand("generate", "Construct and verify a MUB set");
  add_common(generate, true);

  CLI::App* verify = app.add_subcommand("verify", "Re-verify an interchange record");
  verify->add_option("input", opt.input, "record path ('-' or omitted for stdin)");
  verify->add_option("--format", opt.format, "text|records")
      ->check(CLI::IsMember({"text", "records"}));
  verify->add_option("--out", opt.out, "output path (default stdout)");

  CLI::App* bell = app.add_subcommand("bell", "Construct and verify a generalized Bell family");
  add_common(bell, true);

  CLI::App* geometry = app.add_subcommand("geometry", "Finite projective planes");
  geometry->add_option("object", opt.object, "fano|lifted|plane")->required();
  geometry->add_option("--order", opt.order, "plane order (for 'plane')");
  geometry->add_option("--format", opt.format, "text|records")
      ->check(CLI::IsMember({"text", "records"}));
  geometry->add_option("--cap", opt.cap, "order cap");
  geometry->add_option("--out", opt.out, "output path (default stdout)");

  CLI::App* tables = app.add_subcommand("tables", "Field and ring representation tables");
  tables->add_option("target", opt.target, "gf8|gr43|gf|gr4")->required();
  tables->add_option("--p", opt.p, "characteristic (for 'gf')");
  tables->add_option("--m", opt.m, "extension degree (for 'gf'/'gr4')");
  tables->add_option("--format", opt.format, "text|records")
      ->check(CLI::IsMember({"text", "records"}));
  tables->add_option("--out", opt.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (generate->parsed()) return cmd_generate(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (bell->parsed()) return cmd_bell(opt);
    if (geometry->parsed()) return cmd_geometry(opt);
    if (tables->parsed()) return cmd_tables(opt);
  } catch (const mubkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
