#pragma once

// Convenience header pulling in the whole library.

#include "cylpath/bijections.hpp"
#include "cylpath/cylinder.hpp"
#include "cylpath/enumeration.hpp"
#include "cylpath/errors.hpp"
#include "cylpath/params.hpp"
#include "cylpath/weights.hpp"
#include "cylpath/words.hpp"
