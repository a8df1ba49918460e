// Copyright 2026 The Narrate Authors.
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

#ifndef NARRATE_ALM_VALIDATE_H_
#define NARRATE_ALM_VALIDATE_H_

#include "narrate/alm/ast.h"
#include "narrate/alm/signature.h"
#include "narrate/common/diagnostic.h"

namespace narrate::alm {

// Checks name resolution, arities, range restriction, sort acyclicity and
// the history invariants. `external` supplies declarations the program uses
// without defining them (typically the modules it imports). Total: every
// violation yields one diagnostic and the function never throws.
Diagnostics Validate(const Program& program, const Signature& external = Signature());

}  // namespace narrate::alm

#endif  // NARRATE_ALM_VALIDATE_H_
