#pragma once

// Umbrella header: the full defect-group and complexity toolkit for flow
// semigroups of finite graphs and digraphs.

#include "flowsg/complexity.hpp"
#include "flowsg/decompose.hpp"
#include "flowsg/errors.hpp"
#include "flowsg/graph.hpp"
#include "flowsg/group.hpp"
#include "flowsg/oracle.hpp"
#include "flowsg/report.hpp"
#include "flowsg/structure.hpp"
#include "flowsg/transform.hpp"
