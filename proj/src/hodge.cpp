#include "nilg2/hodge.hpp"

// all templated; this unit anchors the header in the library
namespace nilg2 {}
