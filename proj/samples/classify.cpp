// Copyright 2026 The slicckit Authors
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

// Classifies a few states and decides one equivalence, printing plain text.

#include <iostream>

#include "slicckit/slicckit.hpp"

int main() {
    using namespace slicckit;
    const ThreeQubitPureState ghz({1, 0, 0, 0, 0, 0, 0, 1}, "GHZ");
    const ThreeQubitPureState w({0, 1, 1, 0, 1, 0, 0, 0}, "W");
    const ThreeQubitPureState four({1, 1, 1, 2, 0, 0, 0, 0}, "a|000>+b|001>+c|010>+d|011>");

    for (const auto &s : {ghz, w, four}) {
        const auto c = classify(s);
        std::cout << s.label() << ": row " << c.row->id << " via flip " << c.flip.to_string() << ", " << to_string(c.slocc);
        for (const auto &d : c.deltas) std::cout << ", " << d.name << " = " << d.value.real();
        std::cout << '\n';
    }

    // ad/bc = 2 against ad/bc = 1/2 on the same support: related through an
    // antidiagonal operator on B or C.
    const ThreeQubitPureState inverse({1, 2, 1, 1, 0, 0, 0, 0});
    const auto r = solve_slicc_equivalence(four, inverse);
    std::cout << "equivalent: " << std::boolalpha << r.equivalent();
    if (r) std::cout << " (family " << r.witness->family().to_string() << ")";
    std::cout << '\n';
}
