#pragma once

#include "vknot/bounds.hpp"
#include "vknot/cobordism.hpp"
#include "vknot/dkh.hpp"
#include "vknot/error.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/graphs.hpp"
#include "vknot/report.hpp"
#include "vknot/sparse_rank.hpp"
#include "vknot/states.hpp"
