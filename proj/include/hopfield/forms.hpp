#pragma once

#include <stdexcept>
#include <string>

namespace hopfield {

/// Which of the two quadratic forms is being optimized: the positive form
/// maximizes ||H x||_2 over the sign hypercube, the negative form minimizes it.
enum class Form { Positive, Negative };

inline const char* to_string(Form f) {
  return f == Form::Positive ? "positive" : "negative";
}

inline Form parse_form(const std::string& s) {
  if (s == "positive") return Form::Positive;
  if (s == "negative") return Form::Negative;
  throw std::invalid_argument("unknown form: " + s);
}

}  // namespace hopfield
