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

#pragma once

#include "slicckit/audit.hpp"
#include "slicckit/classifier.hpp"
#include "slicckit/coherence.hpp"
#include "slicckit/error.hpp"
#include "slicckit/io.hpp"
#include "slicckit/lattice.hpp"
#include "slicckit/oracle.hpp"
#include "slicckit/registry.hpp"
#include "slicckit/sio.hpp"
#include "slicckit/state.hpp"
