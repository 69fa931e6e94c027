from .parameters_base import ParametersBase


FORMATS = ['table', 'csv', 'json']


class Parameters(ParametersBase):
    """
        Options of the gmolib sub-commands
    """
    def __init__(self, description):
        super().__init__(description)
        self._construct()

    def _add_output(self, parser):
        parser.add_argument(
            '--format',
            dest='format',
            default='table',
            choices=FORMATS,
            action='store',
            type=str,
            help='report format')
        parser.add_argument(
            '--out',
            dest='out',
            default=None,
            action='store',
            type=str,
            help='report file; stdout when absent')

    def _construct(self):
        super()._construct()
        commands = self.parser.add_subparsers(dest='command')
        commands.required = True

        commands.add_parser('list', help='print the case catalog')

        verify = commands.add_parser(
            'verify', help='verify one case, or the whole catalog')
        verify.add_argument(
            '--case',
            dest='case',
            default=None,
            action='store',
            type=str,
            help='case id; every case when absent')
        verify.add_argument(
            '--params',
            dest='params',
            default=None,
            action='store',
            type=str,
            help='key=value list, e.g. "alpha=-0.5,beta=1"')
        self._add_output(verify)

        sweep = commands.add_parser(
            'sweep', help='verify one case over a uniform parameter grid')
        sweep.add_argument(
            '--case',
            dest='case',
            required=True,
            action='store',
            type=str,
            help='case id')
        sweep.add_argument(
            '--param',
            dest='param',
            required=True,
            action='store',
            type=str,
            help='parameter to sweep')
        sweep.add_argument(
            '--from',
            dest='start',
            required=True,
            action='store',
            type=float,
            help='first grid value')
        sweep.add_argument(
            '--to',
            dest='stop',
            required=True,
            action='store',
            type=float,
            help='last grid value')
        sweep.add_argument(
            '--steps',
            dest='steps',
            default=11,
            action='store',
            type=int,
            help='grid points, endpoints included')
        sweep.add_argument(
            '--params',
            dest='params',
            default=None,
            action='store',
            type=str,
            help='values of the other parameters')
        self._add_output(sweep)

        zeta = commands.add_parser(
            'zeta', help='Hurwitz zeta function by one of two routes')
        zeta.add_argument(
            '--s',
            dest='s',
            required=True,
            action='store',
            type=float,
            help='real part of s')
        zeta.add_argument(
            '--s-im',
            dest='s_im',
            default=0.0,
            action='store',
            type=float,
            help='imaginary part of s')
        zeta.add_argument(
            '--q',
            dest='q',
            default=1.0,
            action='store',
            type=float,
            help='shift q > 0')
        zeta.add_argument(
            '--route',
            dest='route',
            default='em',
            choices=['em', 'integral'],
            action='store',
            type=str,
            help='Euler-Maclaurin summation or the kernel integral')

        commands.add_parser('selftest', help='run the property suites')
