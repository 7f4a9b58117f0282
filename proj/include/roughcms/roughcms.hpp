// Copyright 2026 The roughcms Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROUGHCMS_ROUGHCMS_HPP_
#define ROUGHCMS_ROUGHCMS_HPP_

#include "roughcms/errors.hpp"
#include "roughcms/fuzz.hpp"
#include "roughcms/random.hpp"
#include "roughcms/rough.hpp"
#include "roughcms/sequence.hpp"
#include "roughcms/space.hpp"
#include "roughcms/theorems.hpp"
#include "roughcms/tolerance.hpp"

#endif  // ROUGHCMS_ROUGHCMS_HPP_
