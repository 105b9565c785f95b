// Sign of a few braid words in the ordering of B3 given by a = b a^2 b.
#include <iostream>

#include "otype/decision.hpp"

int main() {
  using namespace otype;
  auto P = parse_presentation("gens: a b\nrel: a = b a^2 b\n");
  Decider d(P);
  for (const char* text : {"b^-1 a", "a b^-1", "a^-1 b", "a^-1 b a a b", "b^-3 a"}) {
    SignedWord w = parse_signed_word(P.alphabet(), text);
    OrderSign s = d.order_sign(w);
    std::cout << text << "  " << to_string(s.value);
    if (!s.witness.empty()) std::cout << "  " << format(P.alphabet(), s.witness);
    std::cout << "\n";
  }
}
