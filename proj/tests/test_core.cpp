/**
 * Copyright 2026 The fdtsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "fdtsc/core.hpp"

namespace fdtsc {
namespace {

TimeSeries labeled(std::vector<double> v, Label l) {
    return TimeSeries(std::move(v), l);
}

TEST(ValidateDataset, EqualLengthLabeledSeriesAreValid) {
    std::vector<TimeSeries> s = {labeled({1, 2}, 0), labeled({3, 4}, 1), labeled({5, 6}, 0)};
    auto r = validate_dataset(s, 2);
    EXPECT_TRUE(r.ok());
    EXPECT_NO_THROW(LabeledDataset("d", s));
}

TEST(ValidateDataset, ReportsOffendingIndexOnLengthMismatch) {
    std::vector<TimeSeries> s = {labeled({1, 2}, 0), labeled({3, 4}, 1), labeled({5, 6, 7}, 0)};
    auto r = validate_dataset(s, 2);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.reason, ValidationResult::Reason::LengthMismatch);
    EXPECT_EQ(r.index, 2u);
    EXPECT_THROW(LabeledDataset("d", s), DataError);
}

TEST(ValidateDataset, MissingLabel) {
    std::vector<TimeSeries> s = {labeled({1, 2}, 0), TimeSeries({3, 4})};
    auto r = validate_dataset(s, 2);
    EXPECT_EQ(r.reason, ValidationResult::Reason::MissingLabel);
    EXPECT_EQ(r.index, 1u);
}

TEST(ValidateDataset, NonFiniteValueIsRejectedAtConstruction) {
    try {
        TimeSeries t({1.0, std::nan("")}, 0);
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("non-finite value"), std::string::npos);
    }
    EXPECT_THROW(TimeSeries({std::numeric_limits<double>::infinity()}), DataError);
    EXPECT_THROW(TimeSeries({}), DataError);
}

TEST(Trit, IntegerRoundTrip) {
    for (int v : {-1, 0, 1}) {
        EXPECT_EQ(to_int(trit_from_int(v)), v);
    }
    EXPECT_THROW(trit_from_int(2), InvalidArgument);
    EXPECT_THROW(trit_from_int(-2), InvalidArgument);
}

TEST(Params, ConstructorsValidate) {
    EXPECT_THROW(FdParams(0, 0.1), InvalidArgument);
    EXPECT_THROW(FdParams(4, -0.1), InvalidArgument);
    EXPECT_THROW(FdParams(4, std::numeric_limits<double>::infinity()), InvalidArgument);
    EXPECT_NO_THROW(FdParams(1, 0.0));
    EXPECT_THROW(SaxParams(0, 4), InvalidArgument);
    EXPECT_THROW(SaxParams(4, 1), InvalidArgument);
    EXPECT_THROW(SaxParams(4, 21), InvalidArgument);
    EXPECT_THROW(SaxParams(5, 4).check_against(4), InvalidArgument);
    EXPECT_THROW(DatasetStats(0.0, -1.0), InvalidArgument);
}

TEST(FdVector, WindowIsRecoveredFromLengths) {
    FdVector v({Trit::Pos, Trit::Zero, Trit::Neg}, 6);
    EXPECT_EQ(v.window(), 4u);
    EXPECT_EQ(v.nnz(), 2u);
    EXPECT_THROW(FdVector({}, 3), InvalidArgument);
    EXPECT_THROW(FdVector({Trit::Pos, Trit::Pos}, 1), InvalidArgument);
}

TEST(SaxWord, SymbolsMustFitAlphabet) {
    EXPECT_NO_THROW(SaxWord({1, 4, 2}, 12, 4));
    EXPECT_THROW(SaxWord({0, 1}, 12, 4), InvalidArgument);
    EXPECT_THROW(SaxWord({5}, 12, 4), InvalidArgument);
    EXPECT_THROW(SaxWord({1, 2, 3}, 2, 4), InvalidArgument);
}

TEST(DefaultSegments, RoundsLengthOverEight) {
    EXPECT_EQ(default_sax_segments(1), 1u);
    EXPECT_EQ(default_sax_segments(3), 1u);
    EXPECT_EQ(default_sax_segments(24), 3u);
    EXPECT_EQ(default_sax_segments(140), 18u);  // 17.5 rounds away from zero
    EXPECT_EQ(default_sax_segments(152), 19u);
}

}  // namespace
}  // namespace fdtsc
