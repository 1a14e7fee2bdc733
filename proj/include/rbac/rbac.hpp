#pragma once

#include "rbac/annulus_1d.hpp"
#include "rbac/annulus_circ.hpp"
#include "rbac/annulus_rect_2d.hpp"
#include "rbac/audit.hpp"
#include "rbac/io.hpp"
#include "rbac/oracle.hpp"
#include "rbac/restricted_line.hpp"
#include "rbac/run.hpp"
#include "rbac/svg.hpp"
#include "rbac/voronoi.hpp"
