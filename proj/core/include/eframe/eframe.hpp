// Copyright 2026 The eframe Authors
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

#include "eframe/basis.hpp"
#include "eframe/bounds.hpp"
#include "eframe/campaign.hpp"
#include "eframe/config.hpp"
#include "eframe/decomposition.hpp"
#include "eframe/errors.hpp"
#include "eframe/frame.hpp"
#include "eframe/generators.hpp"
#include "eframe/hilbert.hpp"
#include "eframe/report.hpp"
#include "eframe/theorems.hpp"
#include "eframe/tolerances.hpp"
