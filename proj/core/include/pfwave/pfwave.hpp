#pragma once

#include "pfwave/analysis.hpp"
#include "pfwave/closed_form.hpp"
#include "pfwave/datasets.hpp"
#include "pfwave/spectral.hpp"
#include "pfwave/types.hpp"
#include "pfwave/verify.hpp"
