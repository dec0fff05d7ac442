/*
 * Copyright 2026 The Chandassu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "chandassu/corpus.hpp"
#include "chandassu/meter_config.hpp"
#include "chandassu/padya_bhedam.hpp"

namespace chandassu {

inline constexpr int kReportSchemaVersion = 1;

// Structured analysis of one padyam. The CLI and the HTTP service both
// emit exactly this document.
nlohmann::ordered_json analysis_json(const ScoreReport& report, bool type_detected);

// Meter catalogue with the constraints each type is scored on.
nlohmann::ordered_json types_json(const MeterLibrary& library);

nlohmann::ordered_json summary_json(const EvaluationSummary& summary);
nlohmann::ordered_json lg_agreement_json(const LgAgreementReport& report);

// Serialized form used on every output channel.
std::string dump(const nlohmann::ordered_json& doc);

// Plain-text rendering of an analysis for terminals.
std::string render_report_text(const ScoreReport& report, bool type_detected);

}  // namespace chandassu
