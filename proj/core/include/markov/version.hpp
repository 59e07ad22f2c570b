#pragma once

namespace markov {

inline const char* version_string() { return "markov 0.1.0"; }

}  // namespace markov
