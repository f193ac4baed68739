// Copyright 2026 The tcldpc Authors
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

// Umbrella header.

#pragma once

#include "tcldpc/bitvec.hpp"
#include "tcldpc/channel.hpp"
#include "tcldpc/codeword_io.hpp"
#include "tcldpc/crc.hpp"
#include "tcldpc/detection.hpp"
#include "tcldpc/erfc.hpp"
#include "tcldpc/errors.hpp"
#include "tcldpc/frame.hpp"
#include "tcldpc/gf2_matrix.hpp"
#include "tcldpc/gf2_poly.hpp"
#include "tcldpc/iterative.hpp"
#include "tcldpc/ldpc_codes.hpp"
#include "tcldpc/lowweight.hpp"
#include "tcldpc/mrb.hpp"
#include "tcldpc/outcome.hpp"
#include "tcldpc/qc.hpp"
#include "tcldpc/rng.hpp"
#include "tcldpc/simulator.hpp"
#include "tcldpc/spectrum.hpp"
#include "tcldpc/tanner.hpp"
#include "tcldpc/version.hpp"
