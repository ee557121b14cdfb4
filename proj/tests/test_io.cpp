#include "icr/io.hpp"
#include "icr/random.hpp"

#include <doctest.h>

using namespace icr;

namespace {

template <class T, class Parse>
void round_trip(const T& value, Parse parse) {
  Json j = to_json(value);
  Json again = to_json(parse(parse_text(dump(j)), nullptr));
  CHECK(dump(again) == dump(j));
}

StepMapping example_step() {
  return StepMapping(1, 1, {{VecPlus{1}, BoxUnion::box(VecPlus{1})}, {VecPlus{2}, BoxUnion::box(VecPlus{4})}});
}

}  // namespace

TEST_CASE("box union format") {
  BoxUnion c = BoxUnion::box(VecPlus{1, 2});
  CHECK(to_json(c).dump() == R"({"dim":2,"generators":[["1","2"]]})");
  CHECK(set_from_json(parse_text(R"({"dim":2,"generators":[["1","2"]]})")) == c);
  round_trip(c, set_from_json);
  CHECK(dump(to_json(c)).back() == '\n');
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(rat_from_json(Json("1/0")), ParseError);
  CHECK(rat_from_json(Json(3)) == Rat(3));
  CHECK_THROWS_AS(rat_from_json(Json(1.5)), ParseError);
  CHECK_THROWS_AS(parse_text("{\"dim\": 2,"), ParseError);
  CHECK_THROWS_WITH_AS(set_from_json(parse_text(R"({"dim":2,"generators":[["1","2","3"]]})")),
                       doctest::Contains("/generators/0"), ParseError);
  CHECK_THROWS_AS(set_from_json(parse_text(R"({"dim":2,"generators":[["-1","2"]]})")), ParseError);
  CHECK_THROWS_AS(mapping_from_json(parse_text(R"({"kind":"nope"})")), ParseError);
  CHECK_THROWS_AS(parse_point("1,x"), ParseError);
  CHECK(parse_point("1/2,3") == VecPlus{Rat(1, 2), Rat(3)});
}

TEST_CASE("non-canonical antichains are repaired with a warning") {
  Diagnostics d;
  BoxUnion c = set_from_json(parse_text(R"({"dim":2,"generators":[["1","1"],["1","2"]]})"), &d);
  CHECK(c == BoxUnion::box(VecPlus{1, 2}));
  CHECK(d.warnings.size() == 1);
}

TEST_CASE("mapping round trips") {
  round_trip(Mapping(example_step()), mapping_from_json);
  round_trip(Mapping(HullMapping(example_step())), mapping_from_json);
  Mapping d(DeltaMapping(VecPlus{2, 4}, VecPlus{1, 1}, Rat(1, 3)));
  round_trip(d, mapping_from_json);
  round_trip(Mapping::intersection({d, Mapping(DeltaMapping(VecPlus{1, 1}, VecPlus{0, 2}, Rat(0)))}), mapping_from_json);
  round_trip(Mapping::set_union({d, d}), mapping_from_json);
  round_trip(Mapping::scaled(Rat(3, 2), d), mapping_from_json);
  round_trip(Mapping::enlarged(Rat(1, 4), d), mapping_from_json);
  round_trip(Mapping::closure(d), mapping_from_json);
  round_trip(embed_scalar(MinOfH{{{VecPlus{1, 2}, Rat(1), true}}}), mapping_from_json);
  round_trip(embed_scalar(ScalarStep{{{VecPlus{1}, Rat(2)}}}), mapping_from_json);

  Mapping back = mapping_from_json(to_json(d));
  CHECK(back.eval(VecPlus{4, 1}) == d.eval(VecPlus{4, 1}));
  CHECK_THROWS_AS(mapping_from_json(parse_text(R"({"kind":"delta","l":["1"],"k":["1"],"c":"-1"})")), ParseError);
}

TEST_CASE("random entities round trip") {
  Rng r(101);
  for (int i = 0; i < 50; ++i) {
    std::size_t n = 1 + r.below(3), m = 1 + r.below(3);
    round_trip(random_box_union(r, m, 4, {4, 0, 12}), set_from_json);
    round_trip(Mapping(random_step(r, n, m, 3, 2, {4, 0, 8}, {4, 0, 8})), mapping_from_json);
    round_trip(Mapping(random_delta(r, n, m)), mapping_from_json);
  }
}

TEST_CASE("triple sets, E specifications and sequences") {
  TSet t(1, 2, {{VecPlus{1, 0}, VecPlus{1}, Rat(1)}, {VecPlus{0, 1}, VecPlus{2}, Rat(0)}});
  round_trip(t, tset_from_json);

  ESpec e{VecPlus{1}, VecPlus{3}, ConeSpec(VecPlus{1, 3}, Rat(1, 3)), "hull example"};
  round_trip(e, espec_from_json);
  Json tampered = to_json(e);
  tampered["radius"] = "1/2";
  CHECK_THROWS_WITH_AS(espec_from_json(tampered), doctest::Contains("digest"), ParseError);

  BoxUnion a = BoxUnion::box(VecPlus{1, 0}), b = BoxUnion::box(VecPlus{0, 1});
  round_trip(SetSequence(ConstantSeq{a}), sequence_from_json);
  round_trip(SetSequence(PeriodicSeq{{a, b}}), sequence_from_json);
  round_trip(SetSequence(ScaledSeq{a, {Rat(1), Rat(1), Rat(0)}}), sequence_from_json);
  round_trip(SetSequence(PrefixedSeq{{a}, ScaledSeq{b, {Rat(2), Rat(-1), Rat(0)}}}), sequence_from_json);

  DeltaMapping d(VecPlus{2, 1}, VecPlus{1}, Rat(1));
  round_trip(MappingSequence(ConstantDeltaSeq{d}), mapping_sequence_from_json);
  round_trip(MappingSequence(PeriodicDeltaSeq{{d, d}}), mapping_sequence_from_json);
  round_trip(MappingSequence(ScaledDeltaSeq{VecPlus{2, 1}, VecPlus{1}, {Rat(1), Rat(1), Rat(0)}}),
             mapping_sequence_from_json);
}
