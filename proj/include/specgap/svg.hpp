/* Copyright (c) 2026, The specgap Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 the "License";
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

#include "specgap/fit.hpp"
#include "specgap/survey.hpp"

#include <optional>
#include <span>
#include <string>

namespace specgap {

/// Standalone log-log chart of a survey: delta_N (blue circles), the diff
/// column (black triangles) and the fitted alpha N^-beta (dashed red).
/// Non-positive values are left off the log axes.
std::string survey_svg(std::span<const SurveyLevel> levels, const std::optional<PowerLawFit> &fit,
                       const std::string &title, const Provenance &provenance = {});

void write_survey_svg(std::span<const SurveyLevel> levels, const std::optional<PowerLawFit> &fit,
                      const std::string &title, const std::string &path,
                      const Provenance &provenance = {});

} // namespace specgap
