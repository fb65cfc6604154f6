#pragma once

#include "netcap/caps.hpp"
#include "netcap/error.hpp"
#include "netcap/fixtures.hpp"
#include "netcap/gf.hpp"
#include "netcap/matroid.hpp"
#include "netcap/matroidal.hpp"
#include "netcap/matroidal_io.hpp"
#include "netcap/network.hpp"
#include "netcap/network_io.hpp"
#include "netcap/ray_lp.hpp"
#include "netcap/region.hpp"
#include "netcap/simplex.hpp"
#include "netcap/slinear.hpp"
#include "netcap/steiner.hpp"
