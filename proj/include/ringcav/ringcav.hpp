// Copyright 2026 The ringcav Authors
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

#ifndef RINGCAV_RINGCAV_HPP
#define RINGCAV_RINGCAV_HPP

#include "ringcav/beam.hpp"
#include "ringcav/cascade.hpp"
#include "ringcav/cavity_config.hpp"
#include "ringcav/closed_form.hpp"
#include "ringcav/error.hpp"
#include "ringcav/figures.hpp"
#include "ringcav/golden_section.hpp"
#include "ringcav/response.hpp"
#include "ringcav/scattering_matrix.hpp"
#include "ringcav/sensitivity.hpp"
#include "ringcav/sweep.hpp"
#include "ringcav/table.hpp"

#endif  // RINGCAV_RINGCAV_HPP
