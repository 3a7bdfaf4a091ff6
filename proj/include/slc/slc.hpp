#pragma once

// Everything except the JSON/CSV layer (slc/report.hpp), which needs
// nlohmann/json.

#include "slc/bicyclic.hpp"
#include "slc/bigint.hpp"
#include "slc/canonical.hpp"
#include "slc/charpoly.hpp"
#include "slc/enumerator.hpp"
#include "slc/error.hpp"
#include "slc/families.hpp"
#include "slc/graph.hpp"
#include "slc/identities.hpp"
#include "slc/oracle.hpp"
#include "slc/poly.hpp"
#include "slc/spectral.hpp"
#include "slc/transforms.hpp"
