#include "catg/a79_fixture.hpp"

namespace catg {

const std::string& a79_fixture_text() {
  static const std::string text = R"(# Generators on 80 points: H = <a, b, c> of order 80, and the involution x1
# together with x2, x3, whose inverse-closed set is the pentavalent
# connection set of the Cayley form on Alt({2..80}).
degree 80
a = (1 16 11 6)(2 17 12 7)(3 18 13 8)(4 19 14 9)(5 20 15 10)(21 36 31 26)(22 37 32 27)(23 38 33 28)(24 39 34 29)(25 40 35 30)(41 56 51 46)(42 57 52 47)(43 58 53 48)(44 59 54 49)(45 60 55 50)(61 76 71 66)(62 77 72 67)(63 78 73 68)(64 79 74 69)(65 80 75 70)
b = (1 46 77 35)(2 43 66 28)(3 60 75 21)(4 57 64 34)(5 54 73 27)(6 51 62 40)(7 48 71 33)(8 45 80 26)(9 42 69 39)(10 59 78 32)(11 56 67 25)(12 53 76 38)(13 50 65 31)(14 47 74 24)(15 44 63 37)(16 41 72 30)(17 58 61 23)(18 55 70 36)(19 52 79 29)(20 49 68 22)
c = (1 17 13 9 5)(2 18 14 10 6)(3 19 15 11 7)(4 20 16 12 8)(21 37 33 29 25)(22 38 34 30 26)(23 39 35 31 27)(24 40 36 32 28)(41 57 53 49 45)(42 58 54 50 46)(43 59 55 51 47)(44 60 56 52 48)(61 77 73 69 65)(62 78 74 70 66)(63 79 75 71 67)(64 80 76 72 68)
x1 = (2 22)(3 29)(4 36)(5 23)(6 35)(7 68)(8 79)(9 70)(10 61)(11 77)(12 49)(13 52)(14 55)(15 58)(16 46)(17 20)(18 19)(21 34)(24 60)(25 62)(26 64)(27 28)(30 51)(31 57)(32 66)(33 73)(37 43)(38 54)(39 75)(42 65)(44 53)(45 74)(47 50)(48 63)(56 72)(59 76)(69 80)(71 78)
x2 = (2 5 40 79 75 49 67 36 10 74 37 8 72 62 14 56 18 4 33 70 64 52 34 77 43 69 11 65 30 7 39 58 35 25 44 21 24 9 63 29 31 55 22 38 47 20)(3 26 66 46 78 15 59 19)(6 27 68 71 13 53 17 50 16 42 45 57 76 23)(12 61 73 60 80)(28 32 41)(48 54)
x3 = (2 20)(3 4 25 8 38 7 26 43 44 68 35 76 48 19)(5 32 54 16 58 75 36 24)(6 39 46 56 21 78 42 27 65 51 15 55 47 77 22 23 37 9 71 63 13 80 74 59 34 69 70 10 62 72 12 64 28 67 45 40 57 17 41 79 14 52 50 66 29 31)(11 73 61)(18 49 53 33 60)
)";
  return text;
}

}  // namespace catg
