// Copyright 2026 The Authors.
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

// Small named structures and systems shared by the CLI and the tests.

#ifndef POWEREQ_FIXTURES_H_
#define POWEREQ_FIXTURES_H_

#include "powereq/power.h"
#include "powereq/structure.h"

namespace powereq::fixtures {

// Triangle on {a,b,c}.
FiniteStructure K3();
// Path u1-u2-u3-u4.
FiniteStructure P4();
// Cycle v1..v5.
FiniteStructure C5();
// Chain a < b.
FiniteStructure Chain2();
// Free matroids on {a,b} and {a,b,c}: every subset independent.
FiniteStructure FreeMatroid2();
FiniteStructure FreeMatroid3();
// Only singletons independent, on {a,b,c}.
FiniteStructure Rank1Matroid3();

// Over K3 in the variable x: the family E(x, m_n) where m_1 = [a,a,...],
// m_2 = [b,a,a,...], m_3 = [b,c,a,...], m_4 = [b,c,b,a,...], ...
PowerSystem WrapExampleSystem();

// The four-equation finite system obtained for WrapExampleSystem() by hand:
// [b,c,a,a,...], [a,a,...], [b,c,b,a,b,a,...], [b,c,a,c,a,c,...].
PowerSystem WrapExampleExpected();

}  // namespace powereq::fixtures

#endif  // POWEREQ_FIXTURES_H_
