/*
   Copyright 2026 The superpsi authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SUPERPSI_SUPERPSI_HPP
#define SUPERPSI_SUPERPSI_HPP

#include "rational.hpp"
#include "field.hpp"
#include "superpoly.hpp"
#include "psido.hpp"
#include "linalg.hpp"
#include "modulespec.hpp"
#include "quantization.hpp"
#include "poly.hpp"
#include "invariants.hpp"
#include "decision.hpp"
#include "elimination.hpp"
#include "verify.hpp"

#endif
