#include "icr/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace icr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::size_t count(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::string kind_of(const Json& j, const std::string& path) {
  const Json& k = field(j, path, "kind");
  if (!k.is_string()) fail(sub(path, "kind"), "expected a string");
  return k.get<std::string>();
}

template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  } catch (const std::domain_error& e) {
    fail(path, e.what());
  }
}

Rat rat_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) fail(path, "expected a rational \"p/q\"");
  return guarded(path, [&] { return Rat::parse(j.get<std::string>()); });
}

VecPlus vec_at(const Json& j, const std::string& path) {
  array(j, path);
  std::vector<Rat> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rat_at(j[i], sub(path, i)));
  return guarded(path, [&] { return VecPlus(std::move(v)); });
}

BoxUnion set_at(const Json& j, const std::string& path, Diagnostics* d) {
  std::size_t dim = count(field(j, path, "dim"), sub(path, "dim"));
  const Json& gj = array(field(j, path, "generators"), sub(path, "generators"));
  std::vector<VecPlus> gens;
  for (std::size_t i = 0; i < gj.size(); ++i) {
    std::string p = sub(sub(path, "generators"), i);
    VecPlus g = vec_at(gj[i], p);
    if (g.dim() != dim) fail(p, "generator has dimension " + std::to_string(g.dim()) + ", expected " + std::to_string(dim));
    gens.push_back(std::move(g));
  }
  BoxUnion c = BoxUnion::canonicalize(dim, gens);
  if (c.generators() != gens && d)
    d->warnings.push_back((path.empty() ? std::string("/") : path) + ": antichain was not canonical; canonicalized");
  return c;
}

void require_dims(const Mapping& f, std::size_t n, std::size_t m, const std::string& path) {
  if (f.n() != n || f.m() != m) fail(path, "operand dimensions disagree");
}

ScalarFn scalar_at(const Json& j, const std::string& path) {
  std::string kind = kind_of(j, path);
  if (kind == "min_of_h") {
    const Json& tj = array(field(j, path, "terms"), sub(path, "terms"));
    MinOfH f;
    for (std::size_t i = 0; i < tj.size(); ++i) {
      std::string p = sub(sub(path, "terms"), i);
      bool checked = false;
      if (tj[i].contains("checked")) {
        if (!tj[i]["checked"].is_boolean()) fail(sub(p, "checked"), "expected a boolean");
        checked = tj[i]["checked"].get<bool>();
      }
      f.terms.push_back({vec_at(field(tj[i], p, "k"), sub(p, "k")), rat_at(field(tj[i], p, "c"), sub(p, "c")), checked});
    }
    if (f.terms.empty()) fail(path, "min_of_h needs at least one term");
    return f;
  }
  if (kind == "scalar_step") {
    const Json& pj = array(field(j, path, "pieces"), sub(path, "pieces"));
    ScalarStep f;
    for (std::size_t i = 0; i < pj.size(); ++i) {
      std::string p = sub(sub(path, "pieces"), i);
      f.pieces.emplace_back(vec_at(field(pj[i], p, "threshold"), sub(p, "threshold")),
                            rat_at(field(pj[i], p, "value"), sub(p, "value")));
    }
    return f;
  }
  fail(sub(path, "kind"), "unknown scalar kind \"" + kind + "\"");
}

StepMapping step_at(const Json& j, const std::string& path, Diagnostics* d) {
  std::size_t n = count(field(j, path, "n"), sub(path, "n"));
  std::size_t m = count(field(j, path, "m"), sub(path, "m"));
  const Json& pj = array(field(j, path, "pieces"), sub(path, "pieces"));
  std::vector<StepPiece> pieces;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    std::string p = sub(sub(path, "pieces"), i);
    pieces.push_back({vec_at(field(pj[i], p, "threshold"), sub(p, "threshold")),
                      set_at(field(pj[i], p, "value"), sub(p, "value"), d)});
  }
  return guarded(path, [&] { return StepMapping(n, m, std::move(pieces)); });
}

Mapping mapping_at(const Json& j, const std::string& path, Diagnostics* d);

std::vector<Mapping> parts_at(const Json& j, const std::string& path, Diagnostics* d) {
  const Json& pj = array(field(j, path, "parts"), sub(path, "parts"));
  if (pj.empty()) fail(sub(path, "parts"), "needs at least one operand");
  std::vector<Mapping> parts;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    parts.push_back(mapping_at(pj[i], sub(sub(path, "parts"), i), d));
    require_dims(parts.back(), parts.front().n(), parts.front().m(), sub(sub(path, "parts"), i));
  }
  return parts;
}

Mapping mapping_at(const Json& j, const std::string& path, Diagnostics* d) {
  std::string kind = kind_of(j, path);
  if (kind == "step") return step_at(j, path, d);
  if (kind == "hull") return HullMapping(step_at(field(j, path, "base"), sub(path, "base"), d));
  if (kind == "delta") {
    VecPlus l = vec_at(field(j, path, "l"), sub(path, "l"));
    VecPlus k = vec_at(field(j, path, "k"), sub(path, "k"));
    Rat c = rat_at(field(j, path, "c"), sub(path, "c"));
    return guarded(path, [&] { return Mapping(DeltaMapping(l, k, c)); });
  }
  if (kind == "embed") {
    ScalarFn f = scalar_at(field(j, path, "f"), sub(path, "f"));
    return guarded(path, [&] { return Mapping::embed(std::move(f)); });
  }
  if (kind == "intersect") return guarded(path, [&] { return Mapping::intersection(parts_at(j, path, d)); });
  if (kind == "union") return guarded(path, [&] { return Mapping::set_union(parts_at(j, path, d)); });
  if (kind == "scale" || kind == "enlarge" || kind == "closure") {
    Mapping inner = mapping_at(field(j, path, "inner"), sub(path, "inner"), d);
    if (kind == "closure") return Mapping::closure(std::move(inner));
    const char* key = kind == "scale" ? "t" : "eps";
    Rat a = rat_at(field(j, path, key), sub(path, key));
    return guarded(path, [&] {
      return kind == "scale" ? Mapping::scaled(a, std::move(inner)) : Mapping::enlarged(a, std::move(inner));
    });
  }
  fail(sub(path, "kind"), "unknown mapping kind \"" + kind + "\"");
}

ScalarSeq scalar_seq_at(const Json& j, const std::string& path) {
  return {rat_at(field(j, path, "limit"), sub(path, "limit")), rat_at(field(j, path, "coeff"), sub(path, "coeff")),
          rat_at(field(j, path, "floor"), sub(path, "floor"))};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json espec_body(const ESpec& e) {
  return Json{{"x", to_json(e.x)}, {"y", to_json(e.y)}, {"radius", to_json(e.cone.radius())},
              {"provenance", e.provenance}};
}

}  // namespace

// ---------------------------------------------------------------------------

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const VecPlus& v) {
  Json a = Json::array();
  for (const auto& x : v.entries()) a.push_back(to_json(x));
  return a;
}

Json to_json(const BoxUnion& c) {
  Json g = Json::array();
  for (const auto& v : c.generators()) g.push_back(to_json(v));
  return Json{{"dim", c.dim()}, {"generators", g}};
}

Json to_json(const ScalarFn& f) {
  return std::visit(overloaded{
                        [](const MinOfH& h) {
                          Json t = Json::array();
                          for (const auto& term : h.terms)
                            t.push_back({{"k", to_json(term.k)}, {"c", to_json(term.c)}, {"checked", term.checked}});
                          return Json{{"kind", "min_of_h"}, {"terms", t}};
                        },
                        [](const ScalarStep& s) {
                          Json p = Json::array();
                          for (const auto& [th, v] : s.pieces) p.push_back({{"threshold", to_json(th)}, {"value", to_json(v)}});
                          return Json{{"kind", "scalar_step"}, {"pieces", p}};
                        },
                    },
                    f);
}

namespace {

Json step_json(const StepMapping& s) {
  Json p = Json::array();
  for (const auto& piece : s.pieces()) p.push_back({{"threshold", to_json(piece.threshold)}, {"value", to_json(piece.value)}});
  return Json{{"kind", "step"}, {"n", s.n()}, {"m", s.m()}, {"pieces", p}};
}

Json parts_json(const std::vector<Mapping>& parts) {
  Json a = Json::array();
  for (const auto& p : parts) a.push_back(to_json(p));
  return a;
}

}  // namespace

Json to_json(const Mapping& f) {
  return std::visit(overloaded{
                        [](const StepMapping& s) { return step_json(s); },
                        [](const HullMapping& h) { return Json{{"kind", "hull"}, {"base", step_json(h.base())}}; },
                        [](const DeltaMapping& dm) {
                          return Json{{"kind", "delta"}, {"l", to_json(dm.l())}, {"k", to_json(dm.k())}, {"c", to_json(dm.c())}};
                        },
                        [](const Mapping::Embed& e) { return Json{{"kind", "embed"}, {"f", to_json(e.f)}}; },
                        [](const Mapping::Intersection& i) { return Json{{"kind", "intersect"}, {"parts", parts_json(i.parts)}}; },
                        [](const Mapping::Union& u) { return Json{{"kind", "union"}, {"parts", parts_json(u.parts)}}; },
                        [](const Mapping::Scaled& s) {
                          return Json{{"kind", "scale"}, {"t", to_json(s.t)}, {"inner", to_json(s.inner.front())}};
                        },
                        [](const Mapping::Enlarged& e) {
                          return Json{{"kind", "enlarge"}, {"eps", to_json(e.eps)}, {"inner", to_json(e.inner.front())}};
                        },
                        [](const Mapping::Closure& c) { return Json{{"kind", "closure"}, {"inner", to_json(c.inner.front())}}; },
                    },
                    f.node());
}

Json to_json(const TSet& t) {
  Json a = Json::array();
  for (const auto& tr : t.triples()) a.push_back({{"l", to_json(tr.l)}, {"k", to_json(tr.k)}, {"c", to_json(tr.c)}});
  return Json{{"n", t.n()}, {"m", t.m()}, {"triples", a}};
}

Json to_json(const ESpec& e) {
  Json j = espec_body(e);
  j["digest"] = hex(fnv1a(espec_body(e).dump()));
  return j;
}

Json to_json(const ScalarSeq& s) {
  return Json{{"limit", to_json(s.limit)}, {"coeff", to_json(s.coeff)}, {"floor", to_json(s.floor)}};
}

Json to_json(const SetSequence& s) {
  auto tail = [](const std::variant<ConstantSeq, ScaledSeq>& t) {
    return std::visit(overloaded{
                          [](const ConstantSeq& c) { return Json{{"kind", "constant"}, {"set", to_json(c.set)}}; },
                          [](const ScaledSeq& c) {
                            return Json{{"kind", "scaled"}, {"set", to_json(c.set)}, {"scale", to_json(c.scale)}};
                          },
                      },
                      t);
  };
  return std::visit(overloaded{
                        [](const ConstantSeq& c) { return Json{{"kind", "constant"}, {"set", to_json(c.set)}}; },
                        [](const PeriodicSeq& p) {
                          Json a = Json::array();
                          for (const auto& c : p.sets) a.push_back(to_json(c));
                          return Json{{"kind", "periodic"}, {"sets", a}};
                        },
                        [](const ScaledSeq& c) {
                          return Json{{"kind", "scaled"}, {"set", to_json(c.set)}, {"scale", to_json(c.scale)}};
                        },
                        [&](const PrefixedSeq& p) {
                          Json a = Json::array();
                          for (const auto& c : p.prefix) a.push_back(to_json(c));
                          return Json{{"kind", "prefixed"}, {"prefix", a}, {"tail", tail(p.tail)}};
                        },
                    },
                    s);
}

Json to_json(const MappingSequence& s) {
  auto delta = [](const DeltaMapping& d) { return to_json(Mapping(d)); };
  return std::visit(overloaded{
                        [&](const ConstantDeltaSeq& c) { return Json{{"kind", "constant"}, {"delta", delta(c.delta)}}; },
                        [&](const PeriodicDeltaSeq& p) {
                          Json a = Json::array();
                          for (const auto& d : p.deltas) a.push_back(delta(d));
                          return Json{{"kind", "periodic"}, {"deltas", a}};
                        },
                        [](const ScaledDeltaSeq& d) {
                          return Json{{"kind", "scaled"}, {"l", to_json(d.l)}, {"k", to_json(d.k)}, {"c", to_json(d.c)}};
                        },
                    },
                    s);
}

// ---------------------------------------------------------------------------

Rat rat_from_json(const Json& j, Diagnostics*) { return rat_at(j, ""); }
VecPlus vec_from_json(const Json& j, Diagnostics*) { return vec_at(j, ""); }
BoxUnion set_from_json(const Json& j, Diagnostics* d) { return set_at(j, "", d); }
Mapping mapping_from_json(const Json& j, Diagnostics* d) { return mapping_at(j, "", d); }

TSet tset_from_json(const Json& j, Diagnostics*) {
  std::size_t n = count(field(j, "", "n"), "/n");
  std::size_t m = count(field(j, "", "m"), "/m");
  const Json& a = array(field(j, "", "triples"), "/triples");
  std::vector<Triple> triples;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string p = sub("/triples", i);
    triples.push_back({vec_at(field(a[i], p, "l"), sub(p, "l")), vec_at(field(a[i], p, "k"), sub(p, "k")),
                       rat_at(field(a[i], p, "c"), sub(p, "c"))});
  }
  return guarded("/triples", [&] { return TSet(n, m, std::move(triples)); });
}

ESpec espec_from_json(const Json& j, Diagnostics*) {
  VecPlus x = vec_at(field(j, "", "x"), "/x");
  VecPlus y = vec_at(field(j, "", "y"), "/y");
  Rat r = rat_at(field(j, "", "radius"), "/radius");
  std::string prov;
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string()) fail("/provenance", "expected a string");
    prov = j["provenance"].get<std::string>();
  }
  ESpec e = guarded("", [&] { return ESpec{x, y, ConeSpec(x.concat(y), r), prov}; });
  if (j.contains("digest") && j["digest"] != hex(fnv1a(espec_body(e).dump())))
    fail("/digest", "digest does not match the record");
  return e;
}

SetSequence sequence_from_json(const Json& j, Diagnostics* d) {
  auto tail_at = [&](const Json& t, const std::string& path) -> std::variant<ConstantSeq, ScaledSeq> {
    std::string kind = kind_of(t, path);
    if (kind == "constant") return ConstantSeq{set_at(field(t, path, "set"), sub(path, "set"), d)};
    if (kind == "scaled")
      return ScaledSeq{set_at(field(t, path, "set"), sub(path, "set"), d),
                       scalar_seq_at(field(t, path, "scale"), sub(path, "scale"))};
    fail(sub(path, "kind"), "unsupported tail rule \"" + kind + "\"");
  };
  std::string kind = kind_of(j, "");
  SetSequence out = [&]() -> SetSequence {
    if (kind == "constant" || kind == "scaled") return std::visit([](auto v) -> SetSequence { return v; }, tail_at(j, ""));
    if (kind == "periodic") {
      const Json& a = array(field(j, "", "sets"), "/sets");
      if (a.empty()) fail("/sets", "period must be nonempty");
      PeriodicSeq p;
      for (std::size_t i = 0; i < a.size(); ++i) p.sets.push_back(set_at(a[i], sub("/sets", i), d));
      return p;
    }
    if (kind == "prefixed") {
      const Json& a = array(field(j, "", "prefix"), "/prefix");
      PrefixedSeq p{{}, tail_at(field(j, "", "tail"), "/tail")};
      for (std::size_t i = 0; i < a.size(); ++i) p.prefix.push_back(set_at(a[i], sub("/prefix", i), d));
      return p;
    }
    fail("/kind", "unsupported sequence family \"" + kind + "\"");
  }();
  guarded("", [&] { return sequence_dim(out); });
  return out;
}

MappingSequence mapping_sequence_from_json(const Json& j, Diagnostics* d) {
  auto delta_at = [&](const Json& dj, const std::string& path) {
    Mapping f = mapping_at(dj, path, d);
    const auto* dm = std::get_if<DeltaMapping>(&f.node());
    if (!dm) fail(path, "expected a delta mapping");
    return *dm;
  };
  std::string kind = kind_of(j, "");
  if (kind == "constant") return ConstantDeltaSeq{delta_at(field(j, "", "delta"), "/delta")};
  if (kind == "periodic") {
    const Json& a = array(field(j, "", "deltas"), "/deltas");
    if (a.empty()) fail("/deltas", "period must be nonempty");
    PeriodicDeltaSeq p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      p.deltas.push_back(delta_at(a[i], sub("/deltas", i)));
      if (p.deltas.back().n() != p.deltas.front().n() || p.deltas.back().m() != p.deltas.front().m())
        fail(sub("/deltas", i), "dimensions differ within the period");
    }
    return p;
  }
  if (kind == "scaled") {
    VecPlus l = vec_at(field(j, "", "l"), "/l");
    if (l.is_zero()) fail("/l", "l must be nonzero");
    return ScaledDeltaSeq{l, vec_at(field(j, "", "k"), "/k"), scalar_seq_at(field(j, "", "c"), "/c")};
  }
  fail("/kind", "unsupported mapping sequence \"" + kind + "\"");
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

VecPlus parse_point(const std::string& text) {
  std::vector<Rat> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(Rat::parse(item));
    } catch (const std::exception& e) {
      throw ParseError("point \"" + text + "\": " + e.what());
    }
  }
  if (v.empty()) throw ParseError("point \"" + text + "\" is empty");
  try {
    return VecPlus(std::move(v));
  } catch (const std::exception& e) {
    throw ParseError("point \"" + text + "\": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace icr
