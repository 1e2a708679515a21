// Copyright 2026 The qlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qlogic: decompose, synth, verify, sim over the text formats.
//
// The last line on stdout is always `OK residual=<r>` or `FAIL reason=<code>`.
// Exit codes: 0 ok, 1 verification mismatch, 2 parse/usage, 3 non-unitary,
// 4 reconstruction failed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qlogic/circuit_text.hpp"
#include "qlogic/decompose.hpp"
#include "qlogic/synthlib.hpp"

namespace {

using namespace qlogic;

struct Failure {
  int exit_code;
  std::string reason;
  std::string message;
};

int finish_ok(double residual) {
  std::cout << "OK residual=" << detail::format_double(residual) << "\n";
  return 0;
}

int finish_fail(const Failure& f) {
  if (!f.message.empty()) std::cerr << "qlogic: " << f.message << "\n";
  std::cout << "FAIL reason=" << f.reason << "\n";
  return f.exit_code;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnitary: return 3;
    case ErrorCode::ReconstructionFailed: return 4;
    default: return 2;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{2, "IoError", "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw Failure{2, "IoError", "cannot write " + path};
}

std::string pair_list(const std::set<SubspacePair>& pairs) {
  std::string s;
  for (auto p : pairs) s += (s.empty() ? "" : " ") + ("(" + std::to_string(p.j) + "," + std::to_string(p.k) + ")");
  return s;
}

void print_counts(const Circuit& c) {
  const auto counts = gate_counts(c);
  std::cout << "two-qudit gates: " << counts.two_qudit << "\n";
  std::cout << "one-qudit gates: " << counts.one_qudit << "\n";
  std::cout << "rotations: " << counts.rotations << "\n";
  for (const auto& [kind, n] : counts.by_kind) std::cout << "  " << kind << ": " << n << "\n";
}

int cmd_decompose(const std::string& matrix_path, std::string tmpl, const std::string& out_path) {
  const auto m = parse_matrix(read_file(matrix_path));
  if (tmpl.empty()) tmpl = m.dim() == 3 ? "eq5" : "qudit";
  Template t;
  if (tmpl == "eq4") t = Template::Eq4;
  else if (tmpl == "eq5") t = Template::Eq5;
  else if (tmpl == "qudit") t = Template::QuditRecursive;
  else throw Failure{2, "Usage", "unknown template '" + tmpl + "'"};
  if (!is_unitary(m)) throw Error(ErrorCode::NotUnitary, "input matrix is not unitary");

  const auto r = decompose(m, t);
  const auto text = emit_circuit(r.circuit);
  if (out_path.empty()) std::cout << text;
  else write_file(out_path, text);
  std::cout << "template: " << template_name(r.template_kind) << "\n";
  std::cout << "rotations: " << gate_counts(r.circuit).rotations << "\n";
  std::cout << "subspaces: " << pair_list(r.subspaces_used) << "\n";
  return finish_ok(r.residual);
}

int cmd_verify(const std::string& circuit_path, const std::string& matrix_path, double tol) {
  const auto c = parse_circuit(read_file(circuit_path));
  const auto m = parse_matrix(read_file(matrix_path));
  const auto u = circuit_unitary(c);
  if (u.dim() != m.dim())
    throw Failure{1, "DimMismatch", "circuit is " + std::to_string(u.dim()) + "-dimensional, matrix " +
                                        std::to_string(m.dim())};
  const auto match = equal_up_to_phase(u, m, tol);
  std::cout << "phase: " << detail::format_double(match.phase) << "\n";
  std::cout << "max error: " << detail::format_double(match.error) << "\n";
  if (!match.equal) throw Failure{1, "Mismatch", ""};
  return finish_ok(match.error);
}

NamedSynthesis build_synthesis(const std::string& name, const std::vector<double>& params) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi)
      throw Failure{2, "Usage", "synth " + name + " takes " + std::to_string(lo) + "-" + std::to_string(hi) +
                                    " parameters"};
  };
  auto level = [&](std::size_t i, std::size_t fallback) {
    if (i >= params.size()) return fallback;
    const double v = params[i];
    if (v < 0 || v != std::floor(v)) throw Failure{2, "Usage", "level parameters must be non-negative integers"};
    return static_cast<std::size_t>(v);
  };
  if (name == "feynman") return need(0, 0), synth_feynman();
  if (name == "gxor") return need(0, 0), synth_gxor();
  if (name == "swap") return need(0, 0), synth_swap();
  if (name == "toffoli-typical") return need(0, 0), synth_toffoli_typical();
  if (name == "toffoli-elem") {
    need(0, 4);
    return synth_toffoli_elementary(level(0, 2), level(1, 2), {level(2, 0), level(3, 1)});
  }
  if (name == "tcz") {
    need(0, 2);
    return tcz_from_tcx(level(0, 2), level(1, 1));
  }
  if (name == "ms-z") {
    need(0, 4);
    MSParams p{std::numbers::pi / 4, std::numbers::pi / 4, 0.0, 0.0};
    double* fields[] = {&p.theta1, &p.theta2, &p.phi0, &p.phi1};
    for (std::size_t i = 0; i < params.size(); ++i) *fields[i] = params[i];
    return synth_ms_z(p);
  }
  if (name == "ms-phase") {
    need(0, 1);
    return synth_ms_phase(params.empty() ? std::numbers::pi : params[0]);
  }
  throw Failure{2, "UnknownName", "unknown synthesis '" + name + "'"};
}

int cmd_synth(const std::string& name, const std::vector<double>& params, const std::string& out_path,
              const std::string& matrix_out) {
  const auto s = build_synthesis(name, params);
  const auto match = verify(s);
  print_counts(s.circuit);
  std::cout << "max error: " << detail::format_double(match.error) << "\n";
  if (!match.equal) throw Failure{1, "Mismatch", "construction does not match its target"};
  const auto text = emit_circuit(s.circuit);
  if (out_path.empty()) std::cout << text;
  else write_file(out_path, text);
  if (!matrix_out.empty()) write_file(matrix_out, format_matrix(s.target));
  return finish_ok(match.error);
}

int cmd_sim(const std::string& circuit_path, const std::string& ket) {
  const auto c = parse_circuit(read_file(circuit_path));
  auto s = parse_ket(c.d, ket);
  if (s.width != c.width) throw Error(ErrorCode::DimMismatch, "ket has " + std::to_string(s.width) + " digits, circuit " +
                                                                  std::to_string(c.width) + " wires");
  s = apply(c, std::move(s));
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
    const auto a = s.amplitudes[i];
    if (std::abs(a) < 1e-12) continue;
    std::cout << "|" << s.label(i) << "⟩: " << detail::format_double(a.real()) << ","
              << detail::format_double(a.imag()) << "\n";
  }
  return finish_ok(std::abs(s.norm() - 1.0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qutrit and qudit circuit synthesis and verification"};
  app.require_subcommand(1);

  auto* dec = app.add_subcommand("decompose", "compile a one-qudit matrix into rotations");
  std::string dec_matrix, dec_template, dec_out;
  dec->add_option("matrix", dec_matrix, "matrix file")->required();
  dec->add_option("--template", dec_template, "eq4, eq5 or qudit (default: eq5 for d=3, else qudit)");
  dec->add_option("--out", dec_out, "circuit output file (default: stdout)");

  auto* ver = app.add_subcommand("verify", "compare a circuit with a matrix up to global phase");
  std::string ver_circuit, ver_matrix;
  double ver_tol = kUnitaryTol;
  ver->add_option("circuit", ver_circuit, "circuit file")->required();
  ver->add_option("matrix", ver_matrix, "matrix file")->required();
  ver->add_option("--tol", ver_tol, "max entrywise error")->capture_default_str();

  auto* syn = app.add_subcommand("synth", "emit a named construction");
  std::string syn_name, syn_out, syn_matrix;
  std::vector<double> syn_params;
  syn->add_option("name", syn_name,
                  "feynman, gxor, swap, toffoli-elem [n n' i j], toffoli-typical, ms-z [t1 t2 p0 p1], "
                  "ms-phase [phi], tcz [n m]")
      ->required();
  syn->add_option("params", syn_params, "numeric parameters");
  syn->add_option("--out", syn_out, "circuit output file (default: stdout)");
  syn->add_option("--matrix-out", syn_matrix, "write the target matrix here");

  auto* sim = app.add_subcommand("sim", "run a circuit on a basis state");
  std::string sim_circuit, sim_ket;
  sim->add_option("circuit", sim_circuit, "circuit file")->required();
  sim->add_option("ket", sim_ket, "basis state such as |12>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return finish_fail({2, "Usage", ""});
  }

  try {
    if (*dec) return cmd_decompose(dec_matrix, dec_template, dec_out);
    if (*ver) return cmd_verify(ver_circuit, ver_matrix, ver_tol);
    if (*syn) return cmd_synth(syn_name, syn_params, syn_out, syn_matrix);
    if (*sim) return cmd_sim(sim_circuit, sim_ket);
  } catch (const Failure& f) {
    return finish_fail(f);
  } catch (const Error& e) {
    return finish_fail({exit_code_for(e.code()), std::string(to_string(e.code())), e.what()});
  }
  return finish_fail({2, "Usage", "no command"});
}
