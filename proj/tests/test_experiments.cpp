#include <doctest.h>
// filled in below
