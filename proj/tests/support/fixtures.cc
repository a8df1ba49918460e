// Copyright 2026 The Narrate Authors.
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

#include "support/fixtures.h"

namespace narrate::testing {

const std::vector<std::string>& JsSentences() {
  static const auto* s = new std::vector<std::string>{
      "John traveled to the hallway.", "Sandra journeyed to the hallway."};
  return *s;
}

const std::vector<std::string>& MonkeySentences() {
  static const auto* s = new std::vector<std::string>{"The monkey went to the tree.",
                                                       "The monkey grabbed the banana."};
  return *s;
}

const char kJsProgram[] = R"(system description JS_discourse
  theory JS_discourse_theory
    module JS_discourse_module
      sort declarations
        points, agents :: universe
        move :: actions
          attributes
            actor : agents -> booleans
            origin : points -> booleans
            destination : points -> booleans
      function declarations
        fluents
          basic
            loc_in : agents * points -> booleans
      axioms
        dynamic causal laws
          occurs(X) causes loc_in(A,D) if instance(X,move), actor(X,A),
                                  destination(X,D).
        executability conditions
          impossible occurs(X) if instance(X,move), actor(X,A), loc_in(A,P),
                                  origin(X,O), P!=O.
          impossible occurs(X) if instance(X,move), actor(X,A), loc_in(A,P),
                                  destination(X,D), P=D.
  structure john_and_sandra
    instances
      john, sandra in agents
      hallway in points
      ajin in move
        actor(john) = true
        destination(hallway) = true
      asin in move
        actor(sandra) = true
        destination(hallway) = true
temporal projection
max steps 3
history
  happened(ajin, 0).
  happened(asin, 1).
)";

const char kJsDrs[] = R"(entity(r1).           entity(r2).               entity(r3).
property(r1, "John"). property(r2, "hallway").  property(r3, "Sandra").

event(e1).                             event(e2).
eventType(e1, "run-51.3.2-1").         eventType(e2, "run-51.3.2-1").
eventTime(e1, 0).                      eventTime(e2, 1).
eventArgument(e1, "Theme", r1).        eventArgument(e2, "Theme", r3).
eventArgument(e1, "Destination", r2).  eventArgument(e2, "Destination", r2).
)";

const char kJsGeneratedProgram[] = R"(system description js_discourse
  theory js_discourse_theory
    import t_run_51_3_2.m_run_51_3_2_1 from VN_class_library
    module js_discourse
      depends on t_run_51_3_2.m_run_51_3_2_1
      sort declarations
        john :: living_entity
        hallway :: spatial_entity
        sandra :: living_entity
  structure js_discourse_structure
    instances
      r1 in john
      r2 in hallway
      r3 in sandra
      e1 in run_51_3_2_1
        vn_theme(r1) = true
        vn_destination(r2) = true
      e2 in run_51_3_2_1
        vn_theme(r3) = true
        vn_destination(r2) = true
temporal projection
max steps 3
history
  happened(e1,0).
  happened(e2,1).
)";

const char kFootballStory[] = R"(1 Mary moved to the bathroom.
2 Sandra journeyed to the bedroom.
3 Mary got the football there.
4 John went to the kitchen.
5 Mary went back to the kitchen.
6 Mary went back to the garden.
7 Where is the football?	garden	3 6
)";

}  // namespace narrate::testing
