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

#include "filature/types.hpp"

#include <array>

namespace filature {

namespace {

constexpr std::array<std::string_view, kSlotTypeCount> kSlotNames = {
    "RequestBeneficiary",
    "OpeningGreeting",
    "AddressTerm",
    "ForumActivityDescription",
    "Identity",
    "ProblemPresentation",
    "ResolutionFailure",
    "PsychologicalState",
    "HealthState",
    "RequestFormulation",
    "ExpectedBenefit",
    "ExchangeModalities",
    "CounterGiftWish",
    "AnticipatoryThanks",
    "Closing",
    "Signature",
    "ProverbQuotation",
    "VisualFormatting",
};

constexpr std::array<std::string_view, kReactionTypeCount> kReactionNames = {
    "EncouragementCompliment",
    "CriticismDisagreement",
    "AdviceInformation",
    "SituationEvaluationFollowupQuestion",
    "ExpertiseEvaluationSharedExperience",
};

constexpr std::array<std::string_view, kSupportLabelCount> kLabelNames = {
    "EmotionalSupport",
    "ExperienceSharing",
    "EvaluationRequest",
    "InformationalSupport",
    "Advice",
    "TangibleSupport",
};

}  // namespace

std::string_view to_string(SlotType slot) {
  return kSlotNames[static_cast<std::size_t>(slot)];
}

std::string_view to_string(ReactionType reaction) {
  return kReactionNames[static_cast<std::size_t>(reaction)];
}

std::string_view to_string(SupportLabel label) {
  return kLabelNames[static_cast<std::size_t>(label)];
}

std::optional<SlotType> parse_slot_type(std::string_view name) {
  for (std::size_t i = 0; i < kSlotNames.size(); ++i) {
    if (kSlotNames[i] == name) return static_cast<SlotType>(i);
  }
  return std::nullopt;
}

std::optional<ReactionType> parse_reaction_type(std::string_view name) {
  for (std::size_t i = 0; i < kReactionNames.size(); ++i) {
    if (kReactionNames[i] == name) return static_cast<ReactionType>(i);
  }
  return std::nullopt;
}

std::optional<SupportLabel> parse_support_label(std::string_view name) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == name) return static_cast<SupportLabel>(i);
  }
  return std::nullopt;
}

bool is_background_slot(SlotType slot) {
  switch (slot) {
    case SlotType::OpeningGreeting:
    case SlotType::AddressTerm:
    case SlotType::Closing:
    case SlotType::Signature:
    case SlotType::ProverbQuotation:
    case SlotType::VisualFormatting:
      return true;
    default:
      return false;
  }
}

}  // namespace filature
