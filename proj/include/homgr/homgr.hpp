#pragma once

#include "homgr/earth_model.hpp"
#include "homgr/eikonal.hpp"
#include "homgr/geometry.hpp"
#include "homgr/hom.hpp"
#include "homgr/relativity.hpp"
#include "homgr/scenario.hpp"
#include "homgr/vec.hpp"
