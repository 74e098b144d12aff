//------------------------------------------------------------------------------
//
//   Copyright 2026 The symdiv Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#pragma once

#include "symdiv/families.hpp"
#include "symdiv/simplex.hpp"

// Closed-form specializations of the generic bound machinery for phi_s and psi_s,
// expressed through log-power means. They are independent of the numeric path in
// csiszar.hpp and serve as its cross-check.

namespace symdiv::closed_form {

double phi_E(FamilyParam s, Distribution const &p, Distribution const &q);
double phi_E_star(FamilyParam s, Distribution const &p, Distribution const &q);
double phi_A(FamilyParam s, RatioBounds const &rb);
double phi_B(FamilyParam s, RatioBounds const &rb);
double phi_delta(FamilyParam s, RatioBounds const &rb);
double phi_f3_sup(FamilyParam s, RatioBounds const &rb);  // valid for -1 <= s <= 2

double psi_E(FamilyParam s, Distribution const &p, Distribution const &q);
double psi_E_star(FamilyParam s, Distribution const &p, Distribution const &q);
double psi_A(FamilyParam s, RatioBounds const &rb);
double psi_B(FamilyParam s, RatioBounds const &rb);
double psi_delta(FamilyParam s, RatioBounds const &rb);
double psi_f3_sup(FamilyParam s, RatioBounds const &rb);  // valid for -1 <= s <= 2

}  // namespace symdiv::closed_form
