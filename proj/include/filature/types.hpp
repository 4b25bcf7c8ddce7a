/*
 * Copyright 2026 Filature Contributors
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

#ifndef FILATURE_TYPES_HPP_
#define FILATURE_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace filature {

/// Script slots recognizable in a help-request opening post. Enumerator
/// order is the canonical row order of the cross grid and of every
/// serialized listing; do not reorder.
enum class SlotType : std::uint8_t {
  RequestBeneficiary,
  OpeningGreeting,
  AddressTerm,
  ForumActivityDescription,
  Identity,
  ProblemPresentation,
  ResolutionFailure,
  PsychologicalState,
  HealthState,
  RequestFormulation,
  ExpectedBenefit,
  ExchangeModalities,
  CounterGiftWish,
  AnticipatoryThanks,
  Closing,
  Signature,
  ProverbQuotation,
  VisualFormatting,
};

inline constexpr std::size_t kSlotTypeCount = 18;

/// Reply moves recognizable in responses to a request.
enum class ReactionType : std::uint8_t {
  EncouragementCompliment,
  CriticismDisagreement,
  AdviceInformation,
  SituationEvaluationFollowupQuestion,
  ExpertiseEvaluationSharedExperience,
};

inline constexpr std::size_t kReactionTypeCount = 5;

/// Social-support categories a request can be assigned to.
enum class SupportLabel : std::uint8_t {
  EmotionalSupport,
  ExperienceSharing,
  EvaluationRequest,
  InformationalSupport,
  Advice,
  TangibleSupport,
};

inline constexpr std::size_t kSupportLabelCount = 6;

std::string_view to_string(SlotType slot);
std::string_view to_string(ReactionType reaction);
std::string_view to_string(SupportLabel label);

std::optional<SlotType> parse_slot_type(std::string_view name);
std::optional<ReactionType> parse_reaction_type(std::string_view name);
std::optional<SupportLabel> parse_support_label(std::string_view name);

/// Slots that belong to the framing of any post rather than to the request
/// move itself; these are the only slots also annotated on replies.
bool is_background_slot(SlotType slot);

}  // namespace filature

#endif  // FILATURE_TYPES_HPP_
