#pragma once

#include "bigint.hpp"
#include "finite.hpp"
#include "hesselink.hpp"
#include "hilbert.hpp"
#include "lr.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "series.hpp"
#include "symfunc.hpp"
