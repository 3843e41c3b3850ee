#include "uplogic/fixtures.hpp"

namespace uplogic {

UPStructure marble_fixture() {
  UPStructure m;
  m.states = {"s_r", "s_b", "s_y"};
  m.valuation = {{{"red", true}}, {{"blue", true}}, {{"yellow", true}}};
  for (const Rat& alpha : {Rat(0), Rat(7, 20), Rat(7, 10)})
    m.measures.push_back(
        Measure{{Rat(3, 10), alpha, Rat(7, 10) - alpha}});
  validate(m);
  return m;
}

std::vector<Measure> counterexample_measures() {
  return {
      Measure{{Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}},
      Measure{{Rat(0), Rat(1, 8), Rat(3, 8), Rat(1, 2)}},
      Measure{{Rat(1, 8), Rat(3, 8), Rat(0), Rat(1, 2)}},
      Measure{{Rat(3, 8), Rat(0), Rat(1, 8), Rat(1, 2)}},
  };
}

}  // namespace uplogic
