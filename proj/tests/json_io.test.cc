// Copyright 2026 The mglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mglab/json_io.h"

#include <cstring>

#include "gtest/gtest.h"

#include "mglab/error.h"
#include "test_util.h"

using namespace mglab;
using namespace mglab::testing;
using nlohmann::json;

namespace {

bool same_bits(double a, double b) {
    return std::memcmp(&a, &b, sizeof(double)) == 0;
}

void expect_same_circuit(const MatchgateCircuit &a, const MatchgateCircuit &b) {
    ASSERT_EQ(a.n, b.n);
    ASSERT_EQ(a.layers.size(), b.layers.size());
    for (std::size_t l = 0; l < a.layers.size(); l++) {
        ASSERT_EQ(a.layers[l].size(), b.layers[l].size());
        for (std::size_t g = 0; g < a.layers[l].size(); g++) {
            const Gate2Q &x = a.layers[l][g];
            const Gate2Q &y = b.layers[l][g];
            ASSERT_EQ(x.kind, y.kind);
            ASSERT_EQ(x.wires, y.wires);
            if (x.kind == GateKind::UX) {
                ASSERT_TRUE(same_bits(x.t, y.t));
            }
            if (x.kind == GateKind::Custom) {
                for (int r = 0; r < 4; r++) {
                    for (int c = 0; c < 4; c++) {
                        ASSERT_TRUE(same_bits(x.custom(r, c).real(), y.custom(r, c).real()));
                        ASSERT_TRUE(same_bits(x.custom(r, c).imag(), y.custom(r, c).imag()));
                    }
                }
            }
        }
    }
}

}  // namespace

TEST(json_io, dump_format) {
    const json v = {{"b", 0.1}, {"a", json::array({1, 2, 3})}, {"c", {{"d", true}}}};
    ASSERT_EQ(dump_json(v),
              "{\n"
              "  \"a\": [1, 2, 3],\n"
              "  \"b\": 0.10000000000000001,\n"
              "  \"c\": {\n"
              "    \"d\": true\n"
              "  }\n"
              "}");
    ASSERT_EQ(dump_json(json(0.5)), "0.50000000000000000");
    ASSERT_EQ(dump_json(json::array()), "[]");
    ASSERT_THROW(dump_json(json(std::nan(""))), Error);
}

TEST(json_io, circuit_round_trip_is_bit_exact) {
    Rng rng(1);
    for (int trial = 0; trial < 50; trial++) {
        const std::size_t n = 2 + uniform_below(rng, 8);
        const MatchgateCircuit c = random_circuit(rng, n, 1 + uniform_below(rng, 6));
        const MatchgateCircuit back = circuit_from_json(json::parse(dump_json(circuit_to_json(c))));
        expect_same_circuit(c, back);
        ASSERT_EQ(dump_json(circuit_to_json(back)), dump_json(circuit_to_json(c)));
    }
}

TEST(json_io, circuit_example) {
    MatchgateCircuit c;
    c.n = 3;
    c.layers = {{Gate2Q::ux(0, 0.5)}, {Gate2Q::fswap(1)}};
    const json j = circuit_to_json(c);
    ASSERT_EQ(j["n"], 3);
    ASSERT_EQ(j["layers"][0][0]["kind"], "UX");
    ASSERT_EQ(j["layers"][0][0]["wires"], json::array({0, 1}));
    ASSERT_EQ(j["layers"][1][0]["kind"], "FSWAP");
    ASSERT_FALSE(j["layers"][1][0].contains("t"));
}

TEST(json_io, circuit_parse_errors) {
    const auto kind_of = [](const char *text) {
        try {
            circuit_from_json(json::parse(text));
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    ASSERT_EQ(kind_of(R"({"layers": []})"), ErrorKind::ParseError);
    ASSERT_EQ(kind_of(R"({"n": 2, "layers": [[{"kind": "XY", "wires": [0, 1]}]]})"), ErrorKind::ParseError);
    ASSERT_EQ(kind_of(R"({"n": 2, "layers": [[{"kind": "UX", "wires": [0, 1]}]]})"), ErrorKind::ParseError);
    ASSERT_EQ(kind_of(R"({"n": 2, "layers": [[{"kind": "FSWAP", "wires": [0]}]]})"), ErrorKind::ParseError);
    ASSERT_EQ(kind_of(R"({"n": "two", "layers": []})"), ErrorKind::ParseError);
}

TEST(json_io, skew_round_trip) {
    Rng rng(2);
    for (std::size_t dim : {0, 1, 2, 5, 8}) {
        const SkewMatrix g = random_skew(rng, dim);
        const SkewMatrix back = skew_from_json(json::parse(dump_json(skew_to_json(g))));
        ASSERT_EQ(back.dim(), dim);
        ASSERT_TRUE(back.matrix() == g.matrix());
    }
}

TEST(json_io, plan_round_trip) {
    for (const char *s : {"0", "1", "1011", "00000", "1100110"}) {
        for (bool local : {true, false}) {
            const EmbeddingPlan plan = plan_permutation(Secret::from_string(s), NoiseRate(0.125), local);
            const json j = plan_to_json(plan);
            ASSERT_EQ(j["s"], s);
            ASSERT_EQ(j["m"], plan.m);
            ASSERT_EQ(j["local"], local);
            const EmbeddingPlan back = plan_from_json(json::parse(dump_json(j)));
            ASSERT_EQ(back.wire_roles, plan.wire_roles);
            ASSERT_EQ(back.transpositions, plan.transpositions);
            ASSERT_EQ(back.eta.value(), 0.125);
        }
    }
    json tampered = plan_to_json(plan_permutation(Secret::from_string("01")));
    tampered["m"] = 3;
    ASSERT_THROW(plan_from_json(tampered), Error);
    tampered = plan_to_json(plan_permutation(Secret::from_string("01")));
    tampered["transpositions"] = json::array();
    ASSERT_THROW(plan_from_json(tampered), Error);
}

TEST(json_io, report_fields) {
    LearnReport r;
    r.experiment = "lpn";
    r.n = 4;
    r.eta = 0.25;
    r.samples_used = 100;
    r.success = true;
    r.recovered = Secret::from_string("0101");
    r.seed = 7;
    r.wallclock = std::chrono::seconds(3);
    const json j = report_to_json(r);
    ASSERT_EQ(j["recovered"], "0101");
    ASSERT_EQ(j["samples_used"], 100);
    ASSERT_FALSE(j.contains("tau"));
    ASSERT_FALSE(j.contains("queries_used"));
    ASSERT_FALSE(j.contains("wallclock"));

    LearnReport failed;
    failed.experiment = "sq";
    failed.tau = 0.1;
    ASSERT_TRUE(report_to_json(failed)["recovered"].is_null());
    ASSERT_EQ(report_to_json(failed)["tau"], 0.1);
}
