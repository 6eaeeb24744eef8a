/*
   Copyright 2026 The assha Authors

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

#ifndef ASSHA_ASSHA_HPP
#define ASSHA_ASSHA_HPP

#include "bsd.hpp"
#include "charsums.hpp"
#include "common.hpp"
#include "curve.hpp"
#include "cyclotomic.hpp"
#include "distribution.hpp"
#include "galois_field.hpp"
#include "lfunction.hpp"
#include "parallel.hpp"
#include "places.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "roots.hpp"

#endif  // ASSHA_ASSHA_HPP
