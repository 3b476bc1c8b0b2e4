#include "cgg/labelling.hpp"

#include <string>

#include "cgg/errors.hpp"

namespace cgg {

std::string_view to_string(Parity parity) { return parity == Parity::kOdd ? "odd" : "even"; }

Labelling::Labelling(int n, Parity parity) : n_(n), parity_(parity) {
  if (n < 4) throw ParameterError("labelling needs n >= 4, got " + std::to_string(n));
}

Labelling Labelling::for_free_arc(int n, int arc_size) {
  return Labelling(n, arc_size % 2 == 0 ? Parity::kOdd : Parity::kEven);
}

Label Labelling::normalize(int position) const {
  const int period = 2 * n_;
  int p = position % period;
  if (p < 0) p += period;
  return p > n_ ? p - period : p;
}

bool Labelling::is_vertex_position(int position) const {
  const bool odd = (position % 2) != 0;
  return odd == (parity_ == Parity::kOdd);
}

bool Labelling::is_vertex(Label label) const {
  return label > -n_ && label <= n_ && is_vertex_position(label);
}

Label Labelling::min_label() const { return is_vertex_position(-n_ + 1) ? -n_ + 1 : -n_ + 2; }

int Labelling::to_index(Label label) const {
  if (!is_vertex(label)) throw ParameterError("label " + std::to_string(label) + " is not a vertex");
  return (label - min_label()) / 2;
}

Label Labelling::to_label(int index) const {
  if (index < 0 || index >= n_) throw ParameterError("cyclic index " + std::to_string(index) + " out of range");
  return min_label() + 2 * index;
}

std::vector<Label> Labelling::labels() const {
  std::vector<Label> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) out.push_back(min_label() + 2 * i);
  return out;
}

}  // namespace cgg
