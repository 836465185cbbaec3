// Copyright 2026 The privlab Authors
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


#ifndef PRIVLAB_CLI_SERIALIZE_HPP
#define PRIVLAB_CLI_SERIALIZE_HPP

#include "cli/config.hpp"
#include "privlab/css.hpp"
#include "privlab/distillation.hpp"
#include "privlab/info.hpp"
#include "privlab/privacy.hpp"

namespace privlab::cli {

// {d, n, mz, mx, logical_z, logical_x}; build_code reads it back.
Json to_json(const CssCode& code);
Json to_json(const PrivacyReport& r);
Json to_json(const RateBreakdown& r);
Json to_json(const Corollary1Check& c);
Json to_json(const Transcript& t);
// The final state is summarized by its registers; amplitudes are omitted.
Json to_json(const DistillationOutcome& o);
Json to_json(const HashingResult& r);
Json to_json(const UniversalityEstimate& u);
Json to_json(const AuditRecord& a);
Json to_json(const AppendixDResult& r);
Json to_json(const UhlmannResult& u);

}  // namespace privlab::cli

#endif  // PRIVLAB_CLI_SERIALIZE_HPP
