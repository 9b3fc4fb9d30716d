#ifndef SOFTDITO_SOFTDITO_HPP
#define SOFTDITO_SOFTDITO_HPP

// Umbrella header: the algebra, the three structures, the DSL and the
// exhaustive oracle.

#include "context.hpp"
#include "cotopology.hpp"
#include "ditopology.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "index_set.hpp"
#include "separation.hpp"
#include "soft_map.hpp"
#include "soft_set.hpp"
#include "topology.hpp"

#include "dsl/document.hpp"
#include "dsl/parser.hpp"
#include "dsl/serialize.hpp"

#include "oracle/catalog.hpp"
#include "oracle/enumerate.hpp"
#include "oracle/generators.hpp"
#include "oracle/instance.hpp"
#include "oracle/properties.hpp"
#include "oracle/theorems.hpp"

#endif
