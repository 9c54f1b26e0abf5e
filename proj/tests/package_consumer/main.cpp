#include <burau_lab/burau.hpp>

using namespace burau_lab;

int main() {
  const BraidWord w = parse_word("s1^5", 4);
  return is_identity(specialized_burau(w, minus_q_from_d(5))) ? 0 : 1;
}
