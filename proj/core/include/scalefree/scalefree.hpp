#pragma once

#include "scalefree/csv.hpp"
#include "scalefree/dataset.hpp"
#include "scalefree/error.hpp"
#include "scalefree/evaluation.hpp"
#include "scalefree/model_io.hpp"
#include "scalefree/perturbation.hpp"
#include "scalefree/random.hpp"
#include "scalefree/report.hpp"
#include "scalefree/transformer.hpp"
#include "scalefree/transforms.hpp"
