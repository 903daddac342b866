// Copyright the supergrade developers
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

#pragma once

/**
 * Text grammar for groups, gradings and instances, with line/column
 * diagnostics.  Specs are whitespace-separated tokens: an optional leading
 * form keyword, then key=value pairs.  Values never contain spaces unless
 * wrapped in braces, which nest ({...} carries a whole sub-spec).  '#'
 * comments run to end of line.
 *
 *   group:      Z2xZ4              (case-insensitive, x-separated orders)
 *   element:    (a1,...,ak)        exponents of the invariant factors
 *   grading:    elementary group=Z2xZ2 sig=2,2 theta=(0,0),(0,1),(1,0),(1,1)
 *               pauli k=2
 *               pauli k=1 group=Z2xZ2 sig=2,0 images=(1,0),(0,1)
 *               tensor elem={elementary ...} fine={pauli ...}
 *   instances:  thm52 group=Z2 gs=(0),(1) p=1,1 q=1,1
 *               thm53 group=Z2 gs=(0),(1) p=1,1 q=1,1 perm=0,1
 *               typeq group=Z2 h=(1) gs=(0) k=1
 *
 * Parsing is total with precise errors; rendering is canonical (group
 * elements are normalized), so parse -> render -> parse is the identity.
 */

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "supergrade/abelian_group.hpp"
#include "supergrade/classify.hpp"
#include "supergrade/grading.hpp"
#include "supergrade/supermatrix.hpp"

namespace supergrade {

struct SpecError : std::runtime_error {
  long line;
  long col;
  SpecError(long line_, long col_, const std::string &what_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                           ": " + what_),
        line(line_),
        col(col_) {}
};

struct SpecToken {
  std::string text;
  long line = 1;
  long col = 1;
};

/** Whitespace-separated tokens; braces glue, '#' comments skip to newline. */
inline std::vector<SpecToken> tokenize_spec(const std::string &text, long line = 1, long col = 1) {
  std::vector<SpecToken> out;
  std::size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        advance(text[i]);
        ++i;
      }
      continue;
    }
    SpecToken tok{"", line, col};
    int depth = 0;
    while (i < text.size()) {
      c = text[i];
      if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) break;
      if (c == '{') ++depth;
      if (c == '}') {
        if (depth == 0) throw SpecError(line, col, "unmatched '}'");
        --depth;
      }
      tok.text.push_back(c);
      advance(c);
      ++i;
    }
    if (depth != 0) throw SpecError(tok.line, tok.col, "unterminated '{'");
    out.push_back(std::move(tok));
  }
  return out;
}

struct KeyValue {
  std::string key;
  std::string value;
  long line = 0;
  long col = 0;  // column of the value
};

/** One spec unit: an optional head keyword plus ordered key=value pairs. */
struct ParsedSpec {
  std::string head;
  long line = 1;
  long col = 1;
  std::vector<KeyValue> pairs;

  const KeyValue *find(const std::string &key) const {
    for (const auto &kv : pairs)
      if (kv.key == key) return &kv;
    return nullptr;
  }
  const KeyValue &require(const std::string &key) const {
    const KeyValue *kv = find(key);
    if (!kv) throw SpecError(line, col, (head.empty() ? "spec" : head) + " needs " + key + "=");
    return *kv;
  }
};

inline ParsedSpec parse_spec_text(const std::string &text, long line = 1, long col = 1) {
  ParsedSpec spec;
  spec.line = line;
  spec.col = col;
  const auto tokens = tokenize_spec(text, line, col);
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const SpecToken &tok = tokens[t];
    const std::size_t eq = tok.text.find('=');
    if (eq == std::string::npos) {
      if (t == 0) {
        spec.head = tok.text;
        spec.line = tok.line;
        spec.col = tok.col;
        continue;
      }
      throw SpecError(tok.line, tok.col, "expected key=value, got '" + tok.text + "'");
    }
    if (eq == 0) throw SpecError(tok.line, tok.col, "missing key before '='");
    KeyValue kv{tok.text.substr(0, eq), tok.text.substr(eq + 1), tok.line,
                tok.col + static_cast<long>(eq) + 1};
    for (const auto &seen : spec.pairs)
      if (seen.key == kv.key)
        throw SpecError(tok.line, tok.col, "duplicate key '" + kv.key + "'");
    spec.pairs.push_back(std::move(kv));
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Scalar grammars.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string strip_braces(const std::string &v) {
  if (v.size() >= 2 && v.front() == '{' && v.back() == '}') return v.substr(1, v.size() - 2);
  return v;
}

inline long parse_long_at(const std::string &s, std::size_t &i, long line, long col) {
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw SpecError(line, col + static_cast<long>(start), "expected an integer");
  return std::stol(s.substr(start, i - start));
}

}  // namespace detail

/** "Z2xZ4" (case-insensitive) to the group with those cyclic orders. */
inline FiniteAbelianGroup parse_group(const std::string &s, long line = 1, long col = 1) {
  std::vector<long> orders;
  std::size_t i = 0;
  while (true) {
    if (i >= s.size() || (s[i] != 'Z' && s[i] != 'z'))
      throw SpecError(line, col + static_cast<long>(i), "group spec: expected 'Z<order>'");
    ++i;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start)
      throw SpecError(line, col + static_cast<long>(i), "group spec: expected a cyclic order");
    const long order = std::stol(s.substr(start, i - start));
    if (order < 1)
      throw SpecError(line, col + static_cast<long>(start), "group spec: order must be positive");
    orders.push_back(order);
    if (i == s.size()) break;
    if (s[i] != 'x' && s[i] != 'X')
      throw SpecError(line, col + static_cast<long>(i),
                      "group spec: expected 'x' between factors");
    ++i;
  }
  return FiniteAbelianGroup(orders);
}

/** Canonical rendering (ascending invariant factors; trivial group is Z1). */
inline std::string render_group(const FiniteAbelianGroup &G) { return G.to_string(); }

/** "n,m" to a signature. */
inline SuperSignature parse_signature(const std::string &s, long line = 1, long col = 1) {
  std::size_t i = 0;
  const long n = detail::parse_long_at(s, i, line, col);
  if (i >= s.size() || s[i] != ',')
    throw SpecError(line, col + static_cast<long>(i), "signature: expected 'n,m'");
  ++i;
  const long m = detail::parse_long_at(s, i, line, col);
  if (i != s.size()) throw SpecError(line, col + static_cast<long>(i), "signature: trailing text");
  if (n < 0 || m < 0 || n + m < 1)
    throw SpecError(line, col, "signature: need n,m >= 0 with n+m >= 1");
  return SuperSignature{n, m};
}

inline std::string render_signature(const SuperSignature &sig) {
  return std::to_string(sig.n) + "," + std::to_string(sig.m);
}

/** "1,2,0" to a list of integers. */
inline std::vector<long> parse_long_list(const std::string &s, long line = 1, long col = 1) {
  std::vector<long> out;
  std::size_t i = 0;
  while (true) {
    out.push_back(detail::parse_long_at(s, i, line, col));
    if (i == s.size()) break;
    if (s[i] != ',')
      throw SpecError(line, col + static_cast<long>(i), "list: expected ',' between integers");
    ++i;
  }
  return out;
}

inline std::string render_long_list(const std::vector<long> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

/** "(0,1),(1,0)" to normalized elements of G. */
inline std::vector<GroupElement> parse_element_list(const std::string &s,
                                                    const FiniteAbelianGroup &G, long line = 1,
                                                    long col = 1) {
  std::vector<GroupElement> out;
  std::size_t i = 0;
  while (true) {
    if (i >= s.size() || s[i] != '(')
      throw SpecError(line, col + static_cast<long>(i), "element: expected '('");
    ++i;
    GroupElement e;
    if (i < s.size() && s[i] == ')') {
      ++i;  // "()" is the sole element of the trivial group
    } else {
      while (true) {
        e.push_back(detail::parse_long_at(s, i, line, col));
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
      if (i >= s.size() || s[i] != ')')
        throw SpecError(line, col + static_cast<long>(i), "element: expected ')'");
      ++i;
    }
    try {
      out.push_back(G.make(e));
    } catch (const std::invalid_argument &err) {
      throw SpecError(line, col, std::string("element: ") + err.what());
    }
    if (i == s.size()) break;
    if (s[i] != ',')
      throw SpecError(line, col + static_cast<long>(i), "element: expected ',' between tuples");
    ++i;
  }
  return out;
}

inline std::string render_element_list(const std::vector<GroupElement> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + element_to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Grading specs.
// ---------------------------------------------------------------------------

struct ElementarySpec {
  FiniteAbelianGroup group;
  SuperSignature sig;
  std::vector<GroupElement> theta;
};

struct PauliSpec {
  long k = 0;
  bool convenience = true;  // bare "pauli k=..": (Z2)^{2k}, standard images
  FiniteAbelianGroup group{std::vector<long>{}};
  std::vector<GroupElement> images;
  SuperSignature sig{1, 0};
};

struct TensorGradingSpec {
  ElementarySpec elem;
  PauliSpec fine;
};

using GradingSpec = std::variant<ElementarySpec, PauliSpec, TensorGradingSpec>;

inline GradingSpec parse_grading_spec(const std::string &text, long line = 1, long col = 1);

namespace detail {

inline ElementarySpec parse_elementary(const ParsedSpec &spec) {
  const KeyValue &g = spec.require("group");
  ElementarySpec out{parse_group(g.value, g.line, g.col), SuperSignature{1, 0}, {}};
  const KeyValue &sig = spec.require("sig");
  out.sig = parse_signature(sig.value, sig.line, sig.col);
  const KeyValue &theta = spec.require("theta");
  out.theta = parse_element_list(theta.value, out.group, theta.line, theta.col);
  if (static_cast<long>(out.theta.size()) != out.sig.size())
    throw SpecError(theta.line, theta.col,
                    "theta has " + std::to_string(out.theta.size()) + " entries, signature needs " +
                        std::to_string(out.sig.size()));
  return out;
}

inline PauliSpec parse_pauli(const ParsedSpec &spec) {
  PauliSpec out;
  const KeyValue &k = spec.require("k");
  std::size_t i = 0;
  out.k = parse_long_at(k.value, i, k.line, k.col);
  if (i != k.value.size() || out.k < 0) throw SpecError(k.line, k.col, "pauli: k must be >= 0");
  const KeyValue *group = spec.find("group");
  if (!group) {
    if (spec.find("images") || spec.find("sig"))
      throw SpecError(spec.line, spec.col, "pauli: images/sig need an explicit group");
    return out;
  }
  out.convenience = false;
  out.group = parse_group(group->value, group->line, group->col);
  const KeyValue &sig = spec.require("sig");
  out.sig = parse_signature(sig.value, sig.line, sig.col);
  const KeyValue &images = spec.require("images");
  out.images = parse_element_list(images.value, out.group, images.line, images.col);
  if (static_cast<long>(out.images.size()) != 2 * out.k)
    throw SpecError(images.line, images.col,
                    "pauli: need 2k = " + std::to_string(2 * out.k) + " generator images");
  return out;
}

}  // namespace detail

inline GradingSpec parse_grading_spec(const std::string &text, long line, long col) {
  const ParsedSpec spec = parse_spec_text(text, line, col);
  if (spec.head == "elementary") return detail::parse_elementary(spec);
  if (spec.head == "pauli") return detail::parse_pauli(spec);
  if (spec.head == "tensor") {
    const KeyValue &elem = spec.require("elem");
    const KeyValue &fine = spec.require("fine");
    const ParsedSpec es = parse_spec_text(detail::strip_braces(elem.value), elem.line, elem.col + 1);
    const ParsedSpec fs = parse_spec_text(detail::strip_braces(fine.value), fine.line, fine.col + 1);
    if (es.head != "elementary")
      throw SpecError(elem.line, elem.col, "tensor: elem must be an elementary spec");
    if (fs.head != "pauli") throw SpecError(fine.line, fine.col, "tensor: fine must be a pauli spec");
    return TensorGradingSpec{detail::parse_elementary(es), detail::parse_pauli(fs)};
  }
  throw SpecError(spec.line, spec.col,
                  "unknown grading form '" + spec.head + "' (elementary | pauli | tensor)");
}

inline std::string render_grading_spec(const GradingSpec &spec);

namespace detail {

inline std::string render_elementary(const ElementarySpec &s) {
  return "elementary group=" + render_group(s.group) + " sig=" + render_signature(s.sig) +
         " theta=" + render_element_list(s.theta);
}

inline std::string render_pauli(const PauliSpec &s) {
  std::string out = "pauli k=" + std::to_string(s.k);
  if (!s.convenience)
    out += " group=" + render_group(s.group) + " sig=" + render_signature(s.sig) +
           " images=" + render_element_list(s.images);
  return out;
}

}  // namespace detail

inline std::string render_grading_spec(const GradingSpec &spec) {
  if (const auto *e = std::get_if<ElementarySpec>(&spec)) return detail::render_elementary(*e);
  if (const auto *p = std::get_if<PauliSpec>(&spec)) return detail::render_pauli(*p);
  const auto &t = std::get<TensorGradingSpec>(spec);
  return "tensor elem={" + detail::render_elementary(t.elem) + "} fine={" +
         detail::render_pauli(t.fine) + "}";
}

inline Grading build_grading(const GradingSpec &spec) {
  if (const auto *e = std::get_if<ElementarySpec>(&spec))
    return elementary_grading(e->group, e->theta, e->sig);
  if (const auto *p = std::get_if<PauliSpec>(&spec)) {
    if (p->convenience) return pauli_fine_grading(p->k);
    return pauli_fine_grading(p->k, p->images, p->group, p->sig);
  }
  const auto &t = std::get<TensorGradingSpec>(spec);
  const Grading elem = elementary_grading(t.elem.group, t.elem.theta, t.elem.sig);
  Grading fine = t.fine.convenience ? pauli_fine_grading(t.fine.k)
                                    : pauli_fine_grading(t.fine.k, t.fine.images, t.fine.group,
                                                         t.fine.sig);
  return tensor_grading(elem, fine);
}

// ---------------------------------------------------------------------------
// Instance specs.
// ---------------------------------------------------------------------------

namespace detail {

inline void check_distinct(const std::vector<GroupElement> &gs, long line, long col) {
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i] == gs[j])
        throw SpecError(line, col, "gs entries must be pairwise distinct (slot " +
                                       std::to_string(i) + " repeats at slot " +
                                       std::to_string(j) + ")");
}

}  // namespace detail

/** "thm52 group=.. gs=.. p=.. q=.." to a validated instance. */
inline Thm52Instance parse_thm52_spec(const std::string &text, long line = 1, long col = 1) {
  const ParsedSpec spec = parse_spec_text(detail::strip_braces(text), line, col);
  if (spec.head != "thm52") throw SpecError(spec.line, spec.col, "expected a thm52 spec");
  const KeyValue &g = spec.require("group");
  FiniteAbelianGroup G = parse_group(g.value, g.line, g.col);
  const KeyValue &gs = spec.require("gs");
  auto elements = parse_element_list(gs.value, G, gs.line, gs.col);
  detail::check_distinct(elements, gs.line, gs.col);
  const KeyValue &p = spec.require("p");
  const KeyValue &q = spec.require("q");
  try {
    return Thm52Instance(std::move(G), std::move(elements),
                         parse_long_list(p.value, p.line, p.col),
                         parse_long_list(q.value, q.line, q.col));
  } catch (const std::invalid_argument &err) {
    throw SpecError(spec.line, spec.col, std::string("thm52: ") + err.what());
  }
}

/** "thm53 group=.. gs=.. p=.. q=.. perm=.." to a validated instance. */
inline Thm53Instance parse_thm53_spec(const std::string &text, long line = 1, long col = 1) {
  const ParsedSpec spec = parse_spec_text(detail::strip_braces(text), line, col);
  if (spec.head != "thm53") throw SpecError(spec.line, spec.col, "expected a thm53 spec");
  const KeyValue &g = spec.require("group");
  FiniteAbelianGroup G = parse_group(g.value, g.line, g.col);
  const KeyValue &gs = spec.require("gs");
  auto elements = parse_element_list(gs.value, G, gs.line, gs.col);
  detail::check_distinct(elements, gs.line, gs.col);
  const KeyValue &p = spec.require("p");
  const KeyValue &q = spec.require("q");
  const KeyValue &perm = spec.require("perm");
  try {
    return Thm53Instance(std::move(G), std::move(elements),
                         parse_long_list(p.value, p.line, p.col),
                         parse_long_list(q.value, q.line, q.col),
                         parse_long_list(perm.value, perm.line, perm.col));
  } catch (const std::invalid_argument &err) {
    throw SpecError(spec.line, spec.col, std::string("thm53: ") + err.what());
  }
}

/** "typeq group=.. h=.. gs=.. k=.." to the classify-layer spec. */
inline TypeQSpec parse_typeq_spec(const std::string &text, long line = 1, long col = 1) {
  const ParsedSpec spec = parse_spec_text(detail::strip_braces(text), line, col);
  if (spec.head != "typeq") throw SpecError(spec.line, spec.col, "expected a typeq spec");
  const KeyValue &g = spec.require("group");
  FiniteAbelianGroup G = parse_group(g.value, g.line, g.col);
  const KeyValue &h = spec.require("h");
  auto hs = parse_element_list(h.value, G, h.line, h.col);
  if (hs.size() != 1) throw SpecError(h.line, h.col, "typeq: h takes exactly one element");
  const KeyValue &gs = spec.require("gs");
  auto elements = parse_element_list(gs.value, G, gs.line, gs.col);
  detail::check_distinct(elements, gs.line, gs.col);
  const KeyValue &k = spec.require("k");
  return TypeQSpec{std::move(G), hs[0], std::move(elements),
                   parse_long_list(k.value, k.line, k.col)};
}

inline std::string render_thm52_spec(const Thm52Instance &inst) {
  return "thm52 group=" + render_group(inst.group) + " gs=" + render_element_list(inst.gs) +
         " p=" + render_long_list(inst.p) + " q=" + render_long_list(inst.q);
}

inline std::string render_thm53_spec(const Thm53Instance &inst) {
  return "thm53 group=" + render_group(inst.group) + " gs=" + render_element_list(inst.gs) +
         " p=" + render_long_list(inst.p) + " q=" + render_long_list(inst.q) +
         " perm=" + render_long_list(inst.perm);
}

inline std::string render_typeq_spec(const TypeQSpec &spec) {
  return "typeq group=" + render_group(spec.group) + " h=" + element_to_string(spec.h) +
         " gs=" + render_element_list(spec.gs) + " k=" + render_long_list(spec.k);
}

}  // namespace supergrade
