// Copyright 2026 The qsdc developers
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

#include "qsdc/circuit.hpp"
#include "qsdc/cqasm.hpp"
#include "qsdc/csd.hpp"
#include "qsdc/decompose.hpp"
#include "qsdc/demux.hpp"
#include "qsdc/errors.hpp"
#include "qsdc/matrix.hpp"
#include "qsdc/matrix_io.hpp"
#include "qsdc/mux_rot.hpp"
#include "qsdc/plan.hpp"
#include "qsdc/synthesize.hpp"
#include "qsdc/verifier.hpp"
#include "qsdc/zyz.hpp"
