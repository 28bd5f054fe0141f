#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "jgpi/tideal.hpp"
#include "jgpi/nonscalar.hpp"
#include "jgpi/tableaux.hpp"
#include "jgpi/scalar.hpp"
TEST_CASE("placeholder") { CHECK(true); }
