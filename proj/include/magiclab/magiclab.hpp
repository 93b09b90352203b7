// Copyright 2026 The Magiclab Authors
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

#include "magiclab/catalog.hpp"
#include "magiclab/claims.hpp"
#include "magiclab/clifford.hpp"
#include "magiclab/entanglement.hpp"
#include "magiclab/errors.hpp"
#include "magiclab/exact.hpp"
#include "magiclab/io.hpp"
#include "magiclab/linalg.hpp"
#include "magiclab/magic.hpp"
#include "magiclab/optimize.hpp"
#include "magiclab/states.hpp"
#include "magiclab/structure.hpp"
#include "magiclab/wh_group.hpp"
