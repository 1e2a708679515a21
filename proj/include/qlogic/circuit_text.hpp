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

// Line-oriented circuit format:
//
//   dim <d>
//   wires <n>
//   x <j> <k> @w | h <j> <k> @w | z <n> @w | perm <p0> ... @w
//   rot <x|y|z> <j> <k> <theta> @w | lphase <n> <phi> @w | gphase <alpha>
//   ctrl <cw> <cv> <one-qudit gate without @> @tw
//
// `#` starts a comment. Angles are radians.

#pragma once

#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "qlogic/circuit.hpp"

namespace qlogic {

namespace detail {

struct LineParser {
  std::span<const std::string> toks;
  std::size_t lineno;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  }

  bool done() const { return pos >= toks.size(); }

  const std::string& next(const char* what) {
    if (done()) fail(std::string("missing ") + what);
    return toks[pos++];
  }

  std::size_t index(const char* what) {
    const auto& t = next(what);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) fail(std::string("bad ") + what + " '" + t + "'");
    return v;
  }

  double real(const char* what) { return parse_double(next(what), lineno); }

  std::size_t wire() {
    const auto& t = next("@wire");
    if (t.size() < 2 || t[0] != '@') fail("expected @wire, got '" + t + "'");
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data() + 1, t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) fail("bad wire '" + t + "'");
    return v;
  }

  GateKind one_qudit(const std::string& name) {
    if (name == "x") return gate::XPair{{index("level"), index("level")}};
    if (name == "h") return gate::HPair{{index("level"), index("level")}};
    if (name == "z") return gate::ZLevel{index("level")};
    if (name == "lphase") {
      const auto n = index("level");
      return gate::LevelPhase{n, real("phi")};
    }
    if (name == "rot") {
      const auto& ax = next("axis");
      Axis axis;
      if (ax == "x") axis = Axis::X;
      else if (ax == "y") axis = Axis::Y;
      else if (ax == "z") axis = Axis::Z;
      else fail("bad axis '" + ax + "'");
      const auto j = index("level");
      const auto k = index("level");
      return gate::Rot{axis, {j, k}, real("theta")};
    }
    if (name == "perm") {
      std::vector<std::size_t> p;
      while (!done() && toks[pos][0] != '@') p.push_back(index("perm entry"));
      return gate::Perm{p};
    }
    fail("unknown gate '" + name + "'");
  }
};

inline std::string format_op(const GateKind& op) {
  std::string s(kind_name(op));
  auto pair = [](SubspacePair p) { return " " + std::to_string(p.j) + " " + std::to_string(p.k); };
  if (auto* x = std::get_if<gate::XPair>(&op)) s += pair(x->pair);
  else if (auto* h = std::get_if<gate::HPair>(&op)) s += pair(h->pair);
  else if (auto* z = std::get_if<gate::ZLevel>(&op)) s += " " + std::to_string(z->level);
  else if (auto* l = std::get_if<gate::LevelPhase>(&op))
    s += " " + std::to_string(l->level) + " " + format_double(l->phi);
  else if (auto* r = std::get_if<gate::Rot>(&op))
    s += std::string(" ") + axis_name(r->axis) + pair(r->pair) + " " + format_double(r->theta);
  else if (auto* p = std::get_if<gate::Perm>(&op))
    for (auto v : p->perm) s += " " + std::to_string(v);
  else if (auto* g = std::get_if<gate::GlobalPhase>(&op)) s += " " + format_double(g->alpha);
  return s;
}

}  // namespace detail

inline Circuit parse_circuit(std::istream& in) {
  Circuit c;
  bool have_dim = false, have_wires = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    detail::LineParser lp{toks, lineno};
    const std::string head = lp.next("keyword");

    if (head == "dim" || head == "wires") {
      if (!c.gates.empty()) lp.fail("header after first gate");
      const auto v = lp.index("value");
      if (v < 1) lp.fail(head + " must be >= 1");
      (head == "dim" ? c.d : c.width) = v;
      (head == "dim" ? have_dim : have_wires) = true;
    } else {
      if (!have_dim || !have_wires) lp.fail("gate before 'dim' and 'wires' header");
      CircuitGate g;
      if (head == "gphase") {
        g.op = gate::GlobalPhase{lp.real("alpha")};
      } else if (head == "ctrl") {
        const auto cw = lp.index("control wire");
        const auto cv = lp.index("control value");
        g.control = Control{cw, cv};
        g.op = lp.one_qudit(lp.next("gate"));
        g.target = lp.wire();
      } else {
        g.op = lp.one_qudit(head);
        g.target = lp.wire();
      }
      if (!lp.done()) lp.fail("trailing tokens");
      try {
        validate(c, g);
      } catch (const Error& e) {
        // Level indices out of range are reported as BadWire too.
        throw Error(ErrorCode::BadWire, "line " + std::to_string(lineno) + ": " + e.what());
      }
      c.gates.push_back(std::move(g));
    }
  }
  if (!have_dim || !have_wires) throw Error(ErrorCode::ParseError, "missing 'dim' or 'wires' header");
  return c;
}

inline Circuit parse_circuit(const std::string& text) {
  std::istringstream is(text);
  return parse_circuit(is);
}

inline std::string emit_circuit(const Circuit& c) {
  std::string out = "dim " + std::to_string(c.d) + "\nwires " + std::to_string(c.width) + "\n";
  for (const auto& g : c.gates) {
    if (std::holds_alternative<gate::GlobalPhase>(g.op)) {
      out += detail::format_op(g.op) + "\n";
      continue;
    }
    if (g.control)
      out += "ctrl " + std::to_string(g.control->wire) + " " + std::to_string(g.control->value) + " ";
    out += detail::format_op(g.op) + " @" + std::to_string(g.target) + "\n";
  }
  return out;
}

}  // namespace qlogic
