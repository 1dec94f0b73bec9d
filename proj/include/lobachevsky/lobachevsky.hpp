#pragma once

#include "cevians.hpp"
#include "core.hpp"
#include "correspondence.hpp"
#include "error.hpp"
#include "models.hpp"
#include "prism.hpp"
#include "report.hpp"
#include "sampling.hpp"
#include "solvers.hpp"
#include "spheres.hpp"
#include "triangle.hpp"
#include "vec.hpp"
#include "verify.hpp"
