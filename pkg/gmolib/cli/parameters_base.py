import argparse
import json


class ParametersBase():
    """
        Base class for the command-line options of gmolib
        (options shared by every sub-command)
    """
    def __init__(self, description):
        self.parser = argparse.ArgumentParser(description=description)
        self.params = None

    def _construct(self):
        self.parser.add_argument(
            '--tol',
            dest='tol',
            default=None,
            action='store',
            type=float,
            help='absolute and relative quadrature tolerance')
        self.parser.add_argument(
            '--max-evals',
            dest='max_evals',
            default=200000,
            action='store',
            type=int,
            help='integrand evaluations per quadrature')
        self.parser.add_argument(
            '--max-depth',
            dest='max_depth',
            default=50,
            action='store',
            type=int,
            help='bisection depth of the adaptive quadrature')
        self.parser.add_argument(
            '--max-level',
            dest='max_level',
            default=12,
            action='store',
            type=int,
            help='step halvings of the double-exponential quadrature')
        self.parser.add_argument(
            '--jobs',
            dest='jobs',
            default=1,
            action='store',
            type=int,
            help='parallel jobs')
        self.parser.add_argument(
            '--config',
            dest='config',
            default=None,
            action='store',
            type=str,
            help='json file of option overrides')
        self.parser.add_argument(
            '--save-config',
            dest='save_config',
            default=None,
            action='store',
            type=str,
            help='write the effective options to this json file')
        self.parser.add_argument(
            '-v', '--verbose',
            dest='verbose',
            default=False,
            action='store_true',
            help='log progress to stderr')
        self.parser.add_argument(
            '--experimental',
            dest='experimental',
            default=False,
            action='store_true',
            help='admit complex beta for GEN_BETA')

    def parse_args(self, argv=None):
        self.params = self.parser.parse_args(argv)
        if self.params.config is not None:
            self.load(self.params.config)
        return self.params

    def load(self, fname):
        with open(fname) as infile:
            vars(self.params).update(json.load(infile))

    def save(self, fname):
        with open(fname, 'w') as outfile:
            json.dump(vars(self.params), outfile, indent=4)
