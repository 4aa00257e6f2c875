// Copyright 2026 The qmetro Authors
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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "qmetro/pattern_io.hpp"

using namespace qmetro;

namespace {

std::string read_golden(const std::string &name) {
    std::ifstream in(std::string(QMETRO_GOLDEN_DIR) + "/" + name);
    EXPECT_TRUE(in.good()) << name;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(PatternIo, ParityText) {
    EXPECT_EQ(parity_to_text(Parity::zero()), "-");
    EXPECT_EQ(parity_to_text(Parity::one()), "1");
    EXPECT_EQ(parity_to_text(Parity::of({0, 2})), "s0+s2");
    EXPECT_EQ(parity_to_text(Parity::of({1}, true)), "1+s1");
    for (const auto &p : {Parity::zero(), Parity::one(), Parity::of({3, 1}), Parity::of({0}, true)}) {
        EXPECT_EQ(parity_from_text(parity_to_text(p)), p);
    }
    EXPECT_THROW(parity_from_text("s"), std::invalid_argument);
    EXPECT_THROW(parity_from_text("t1"), std::invalid_argument);
}

TEST(PatternIo, RoundTrip) {
    for (const auto &p : {ghz_pattern(3), cnot_pattern(), yrotation_pattern(-1.3), teleportation_pattern(0.1, true),
                          sine_pattern(4)}) {
        const auto back = from_text(to_text(p));
        EXPECT_EQ(back.name, p.name);
        EXPECT_EQ(back.graph.edges, p.graph.edges);
        EXPECT_EQ(back.inputs, p.inputs);
        EXPECT_EQ(back.outputs, p.outputs);
        EXPECT_EQ(back.measurements, p.measurements);
        EXPECT_EQ(back.corrections, p.corrections);
    }
}

TEST(PatternIo, GoldenFilesMatch) {
    EXPECT_EQ(to_text(ghz_pattern(4)), read_golden("ghz_4.txt"));
    EXPECT_EQ(to_text(cnot_pattern()), read_golden("cnot.txt"));
    EXPECT_EQ(to_text(yrotation_pattern(0.5)), read_golden("yrotation_0.5.txt"));
}

TEST(PatternIo, GoldenSineAgreesNumerically) {
    const auto golden = from_text(read_golden("sine_3.txt"));
    const auto p = sine_pattern(3);
    EXPECT_EQ(golden.graph.edges, p.graph.edges);
    EXPECT_EQ(golden.corrections, p.corrections);
    ASSERT_EQ(golden.measurements.size(), p.measurements.size());
    for (std::size_t i = 0; i < p.measurements.size(); ++i) {
        EXPECT_EQ(golden.measurements[i].vertex, p.measurements[i].vertex);
        EXPECT_EQ(golden.measurements[i].angle.sign, p.measurements[i].angle.sign);
        EXPECT_NEAR(golden.measurements[i].angle.base, p.measurements[i].angle.base, 1e-12);
    }
    EXPECT_TRUE(verify_pattern(golden, embed_unary(sine_coefficients(3))).passed);
}

TEST(PatternIo, ErrorsCarryLineNumbers) {
    try {
        from_text("pattern x\nvertices 2\nedge 0 5\n");
        FAIL() << "expected a parse error";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(from_text("pattern x\nvertices 2\nbogus 1\n"), std::invalid_argument);
    EXPECT_THROW(from_text("pattern x\nvertices 2\nedge 0 1\noutputs 1\n"), std::invalid_argument);
}
