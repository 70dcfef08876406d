#pragma once

#include "warmgray/bench.hpp"
#include "warmgray/colorspaces.hpp"
#include "warmgray/decolor.hpp"
#include "warmgray/errors.hpp"
#include "warmgray/image.hpp"
#include "warmgray/io.hpp"
#include "warmgray/luminance.hpp"
#include "warmgray/metrics.hpp"
#include "warmgray/parallel.hpp"
#include "warmgray/tonemap.hpp"
