#pragma once

#include "linkage/campaigns.hpp"
#include "linkage/certificates.hpp"
#include "linkage/collection.hpp"
#include "linkage/connectivity.hpp"
#include "linkage/enumerate.hpp"
#include "linkage/errors.hpp"
#include "linkage/feasibility.hpp"
#include "linkage/generate.hpp"
#include "linkage/graph.hpp"
#include "linkage/io.hpp"
#include "linkage/planarity.hpp"
#include "linkage/serialize.hpp"
