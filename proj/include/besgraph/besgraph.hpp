/*
 * Copyright 2026 The besgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "besgraph/bes.hpp"
#include "besgraph/bisim.hpp"
#include "besgraph/error.hpp"
#include "besgraph/fixtures.hpp"
#include "besgraph/formula.hpp"
#include "besgraph/iso.hpp"
#include "besgraph/parser.hpp"
#include "besgraph/pipeline.hpp"
#include "besgraph/propgen.hpp"
#include "besgraph/sgraph.hpp"
#include "besgraph/sgraph_io.hpp"
#include "besgraph/solver.hpp"
#include "besgraph/sos.hpp"
#include "besgraph/transform.hpp"
#include "besgraph/translate.hpp"
